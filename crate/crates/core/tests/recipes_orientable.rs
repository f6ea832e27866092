use kn_embed::currents::index3::{derive_index3, parse_seed};
use kn_embed::recipes::downgrade::downgrade_type;
use kn_embed::recipes::paths::{k30_variant, p3_type6, K30Variant};
use kn_embed::rotfmt::parse_rot;
use kn_embed::surgery::script::Script;
use kn_embed::Embedding;

fn fixture(name: &str) -> String {
    let p = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    std::fs::read_to_string(p).unwrap()
}

fn k10_p3() -> Embedding {
    Embedding::new(parse_rot(&fixture("k10_p3.rot")).unwrap()).unwrap()
}

fn k30() -> Embedding {
    Embedding::new(derive_index3(&parse_seed(&fixture("k30.seed")).unwrap()).unwrap()).unwrap()
}

#[test]
fn k10_type6_and_downgrades() {
    let b = p3_type6(&k10_p3()).unwrap();
    assert_eq!(b.output.embedding_type(), vec![6]);
    assert_eq!(b.output.surface.genus, 4);
    assert!(b.output.sys.is_complete());
    for t in [vec![5, 4], vec![4, 4, 4]] {
        let d = downgrade_type(&b.output, &t).unwrap();
        assert_eq!(d.output.embedding_type(), t);
        assert_eq!(d.output.surface.genus, 4);
    }
}

#[test]
fn script_replays() {
    let b = p3_type6(&k10_p3()).unwrap();
    let text = b.script.to_text();
    let again = Script::parse(&text).unwrap().replay(&b.input).unwrap();
    assert_eq!(again.sys, b.output.sys);
}

#[test]
fn k30_all_variants() {
    let base = k30();
    for v in K30Variant::ALL {
        let b = k30_variant(&base, v).unwrap();
        assert!(b.output.is_triangular());
        assert_eq!(b.output.surface.genus, 58);
    }
    let e = k30_variant(&base, K30Variant::E).unwrap();
    let t = p3_type6(&e.output).unwrap();
    assert_eq!(t.output.embedding_type(), vec![6]);
    assert_eq!(t.output.surface.genus, 59);
}

#[test]
fn k30_k3_min_genus() {
    use kn_embed::recipes::triples::{k3_five_gons, k3_min_genus};
    let base = k30();
    let zero: kn_embed::Label = "0".parse().unwrap();
    assert_eq!(k3_five_gons(&base, &zero).unwrap().len(), 3);
    for t in [vec![5, 4], vec![4, 4, 4]] {
        let b = k3_min_genus(&base, &zero, &t).unwrap();
        assert_eq!(b.output.embedding_type(), t);
        assert_eq!(b.output.surface.genus, 59);
    }
}

fn k20() -> Embedding {
    Embedding::new(derive_index3(&parse_seed(&fixture("k20.seed")).unwrap()).unwrap()).unwrap()
}

#[test]
fn k20_case8() {
    use kn_embed::recipes::case8::case8;
    let b = case8(&k20(), 1).unwrap();
    assert_eq!(b.output.embedding_type(), vec![5]);
    assert_eq!(b.output.surface.genus, 23);
    let d = downgrade_type(&b.output, &[4, 4]).unwrap();
    assert_eq!(d.output.embedding_type(), vec![4, 4]);
    assert!(matches!(case8(&k20(), 0), Err(kn_embed::Error::Refusal(_))));
}
