use kn_embed::distribution::format_type;
use kn_embed::rules::check_rule_r_star;
use kn_embed::surgery::ops::*;
use kn_embed::{Embedding, Label, RotationSystem};

fn l(s: &str) -> Label {
    s.parse().unwrap()
}

/// K7 from the Z7 log 1 3 2 6 4 5.
fn k7() -> Embedding {
    let log = [1u32, 3, 2, 6, 4, 5];
    let rows = (0..7u32).map(|k| (Label::Num(k), log.iter().map(|g| Label::Num((g + k) % 7)).collect()));
    Embedding::new(RotationSystem::from_rows_orientable(rows).unwrap()).unwrap()
}

#[test]
fn k7_torus() {
    let e = k7();
    assert!(check_rule_r_star(&e.sys));
    assert_eq!(e.faces.len(), 14);
    assert_eq!(e.surface.genus, 1);
}

#[test]
fn flip_and_back() {
    let e = k7();
    // delete (0,1): apexes are the third vertices of the two triangles on it
    let on = e.faces_with_edge(0, 1);
    let apex: Vec<Label> = on
        .iter()
        .map(|&f| {
            let v = e.faces[f].vertices().into_iter().find(|&x| x != 0 && x != 1).unwrap();
            e.sys.label(v).clone()
        })
        .collect();
    // K7 is complete, so flipping needs a missing diagonal: delete an edge first
    let d = delete_edge(&e, &apex[0], &apex[1]).unwrap();
    assert!(!d.split_face);
    assert_eq!(format_type(&d.embedding.embedding_type()), "(4)");
    let e2 = d.embedding;
    let f = edge_flip(&e2, &l("0"), &l("1"), &apex[0], &apex[1]).unwrap();
    assert_eq!(f.surface, e2.surface);
    assert!(f.sys.has_edge_labels(&apex[0], &apex[1]));
    let back = edge_flip(&f, &apex[0], &apex[1], &l("0"), &l("1")).unwrap();
    assert_eq!(back.sys, e2.sys);
    assert!(edge_flip(&e2, &l("0"), &l("2"), &apex[0], &apex[1]).is_err());
}

#[test]
fn crosscap_merges() {
    let e = k7();
    let n = add_crosscap_on_edge(&e, &l("0"), &l("1")).unwrap();
    assert!(!n.surface.orientable);
    assert_eq!(n.surface.genus, 3);
    assert_eq!(format_type(&n.embedding_type()), "(6)");
}

#[test]
fn construction_k3_on_k7() {
    let e = k7();
    // row 0: 1 3 2 6 4 5; x,y,z = 1, 2, 4 alternate with 3, 6, 5
    let n = construction_k3(&e, &l("0"), &l("1"), &l("2"), &l("4")).unwrap();
    assert_eq!(n.surface.genus, 2);
    assert_eq!(n.embedding_type(), vec![12]);
    assert!(construction_k3(&e, &l("0"), &l("1"), &l("4"), &l("2")).is_err());
    assert!(construction_k3(&e, &l("0"), &l("1"), &l("3"), &l("4")).is_err());
}

#[test]
fn delete_vertex_and_subdivide() {
    let e = k7();
    let d = delete_vertex(&e, &l("6")).unwrap();
    assert_eq!(d.embedding_type(), vec![6]);
    let f = d.faces.iter().find(|f| f.len() == 6).unwrap().hash.clone();
    let s = subdivide_face(&d, &f, &l("6")).unwrap();
    assert_eq!(s.sys, e.sys);
}

#[test]
fn contract_in_subdivided_face() {
    let e = k7();
    let d = delete_vertex(&e, &l("6")).unwrap();
    let f = d.faces.iter().find(|f| f.len() == 6).unwrap().hash.clone();
    let s = subdivide_face(&d, &f, &l("w")).unwrap();
    // w shares neighbors with 0
    assert!(contract_edge(&s, &l("w"), &l("0"), &l("w")).is_err());
}
