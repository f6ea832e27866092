use kn_embed::currents::index3::{derive_index3, parse_seed};
use kn_embed::exec::Exec;
use kn_embed::label::Label;
use kn_embed::recipes::nonorientable::{
    crosscap_interpolation, euler_genus, k7_nonorientable, nonorientable_case8, nonorientable_knk2,
};
use kn_embed::search::graph::parse_graph;
use kn_embed::search::triangular::{find_triangular, Outcome, SearchSpec};
use kn_embed::Embedding;

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn found(g: &str) -> Embedding {
    let spec = SearchSpec::new(parse_graph(g).unwrap(), true);
    match find_triangular(&spec, Exec::Parallel).unwrap() {
        Outcome::Found(sys) => Embedding::new(sys).unwrap(),
        other => panic!("{g}: {other:?}"),
    }
}

#[test]
fn k5_projective_plane() {
    let base = found("K5-K2");
    for t in [&[5usize][..], &[4, 4][..]] {
        let b = nonorientable_knk2(&base, &Label::Num(0), t).unwrap();
        assert_eq!(b.output.embedding_type(), t.to_vec());
        assert!(!b.output.surface.orientable);
        assert_eq!(b.output.surface.genus, 1);
        assert_eq!(b.output.faces.len(), 6);
        assert_eq!(b.script.replay(&base).unwrap(), b.output);
    }
}

#[test]
fn k7_n3_types() {
    let [six, p, q] = k7_nonorientable(&found("K7")).unwrap();
    for (b, t) in [(six, vec![6]), (p, vec![5, 4]), (q, vec![4, 4, 4])] {
        assert_eq!(b.output.embedding_type(), t);
        assert_eq!((b.output.surface.orientable, b.output.surface.genus), (false, 3));
        assert_eq!(b.output.faces.len(), 13);
    }
}

#[test]
fn k20_n46() {
    let base = Embedding::new(derive_index3(&parse_seed(&fixture("k20.seed")).unwrap()).unwrap()).unwrap();
    for t in [&[5usize][..], &[4, 4][..]] {
        let b = nonorientable_case8(&base, 1, t).unwrap_or_else(|e| panic!("{t:?}: {e}"));
        assert_eq!(b.output.embedding_type(), t.to_vec());
        assert_eq!((b.output.surface.orientable, b.output.surface.genus), (false, 46));
    }
}

#[test]
fn k5_interpolation() {
    let base = nonorientable_knk2(&found("K5-K2"), &Label::Num(0), &[5]).unwrap().output;
    let steps = crosscap_interpolation(&base, 6).unwrap();
    assert_eq!(steps.len(), 6);
    for (k, b) in steps.iter().enumerate() {
        assert_eq!(euler_genus(&b.output), k as u64 + 1);
        assert!(b.output.faces.iter().filter(|f| f.len() > 3).count() <= 1);
    }
    assert_eq!(steps[5].output.faces.len(), 1);
}

#[test]
fn xuong_4_to_12() {
    use kn_embed::recipes::maxgenus::xuong_max_genus;
    for n in 4u32..=12 {
        let b = xuong_max_genus(n).unwrap();
        let e = &b.output;
        let faces = if n % 4 == 1 || n % 4 == 2 { 1 } else { 2 };
        assert_eq!(e.faces.len(), faces, "K{n}");
        let edges = (n * (n - 1) / 2) as i64;
        let chi = n as i64 - edges + faces as i64;
        assert_eq!(e.surface.genus as i64, (2 - chi) / 2);
        let row1: Vec<Label> = e.sys.row_from(&Label::Num(1), &Label::Num(2)).unwrap();
        assert_eq!(row1, (2..=n).map(Label::Num).collect::<Vec<_>>());
        if faces == 2 {
            assert!(e.faces.iter().any(|f| f.len() == 3));
        }
    }
}
