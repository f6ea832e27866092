use std::collections::BTreeMap;

use kn_embed::currents::derive::{derive_system, VortexType};
use kn_embed::currents::graph::CurrentGraph;
use kn_embed::currents::index3::{derive_index3, parse_seed};
use kn_embed::currents::log::parse_log;
use kn_embed::rules::check_rule_r_star;
use kn_embed::Embedding;

fn fixture(name: &str) -> String {
    let p = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn k30_seed() {
    let sys = derive_index3(&parse_seed(&fixture("k30.seed")).unwrap()).unwrap();
    assert!(check_rule_r_star(&sys));
    let e = Embedding::new(sys).unwrap();
    assert_eq!(e.surface.genus, 58);
    assert!(e.is_triangular());
}

#[test]
fn k20_seed() {
    let sys = derive_index3(&parse_seed(&fixture("k20.seed")).unwrap()).unwrap();
    assert!(check_rule_r_star(&sys));
    let e = Embedding::new(sys).unwrap();
    assert_eq!((e.sys.vertex_count(), e.sys.edge_count(), e.faces.len()), (21, 189, 126));
    assert_eq!(e.surface.genus, 22);
}

#[test]
fn z18_log() {
    let log = parse_log(&fixture("z18_example.log"), 18).unwrap();
    let kinds: BTreeMap<String, VortexType> = [
        ("x", VortexType::T1),
        ("y", VortexType::T2),
        ("a", VortexType::T3),
        ("b", VortexType::T3),
        ("c", VortexType::T3),
        ("u", VortexType::T3),
        ("v", VortexType::T3),
        ("w", VortexType::T3),
    ]
    .into_iter()
    .map(|(a, b)| (a.to_string(), b))
    .collect();
    let cg = CurrentGraph::from_log(&log, 18, &kinds).unwrap();
    let rep = cg.validate().unwrap();
    println!("{rep:?}");
    assert!(rep.is_valid());
    assert_eq!(cg.trace_log().unwrap(), log);
    let sys = derive_system(&log, 18, &cg.vortex_info()).unwrap();
    for v in 0..sys.vertex_count() {
        let r: Vec<String> = sys.row_labels(v).iter().map(|l| l.to_string()).collect();
        println!("{}. {}", sys.label(v), r.join(" "));
    }
    assert!(check_rule_r_star(&sys));
}
