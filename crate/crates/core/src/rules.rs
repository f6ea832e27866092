//! Local triangularity rules on rotation rows.
//!
//! Rule R*: whenever row `i` reads `... j k l ...`, row `k` reads
//! `... l i j ...`. Rule R also admits `... j i l ...`.

use crate::rotation::RotationSystem;

fn r_star_at(sys: &RotationSystem, i: usize, k: usize) -> bool {
    let j = sys.pred(i, k);
    let l = sys.succ(i, k);
    sys.pred(k, i) == l && sys.succ(k, i) == j
}

fn reversed_at(sys: &RotationSystem, i: usize, k: usize) -> bool {
    let j = sys.pred(i, k);
    let l = sys.succ(i, k);
    sys.pred(k, i) == j && sys.succ(k, i) == l
}

/// Rule R*. Systems carrying any negative signature fail.
pub fn check_rule_r_star(sys: &RotationSystem) -> bool {
    sys.is_all_positive()
        && (0..sys.vertex_count()).all(|i| sys.row(i).iter().all(|&k| r_star_at(sys, i, k)))
}

/// Rule R on the rows alone; signatures are ignored.
pub fn check_rule_r(sys: &RotationSystem) -> bool {
    (0..sys.vertex_count())
        .all(|i| sys.row(i).iter().all(|&k| r_star_at(sys, i, k) || reversed_at(sys, i, k)))
}

/// For rows satisfying Rule R, the signatures that make every traced face a
/// triangle: +1 where the R* form holds, -1 where the reversed form holds.
pub fn rule_r_signatures(sys: &RotationSystem) -> Option<RotationSystem> {
    if !check_rule_r(sys) {
        return None;
    }
    let mut out = sys.clone();
    for (i, k) in sys.edges() {
        let s = if r_star_at(sys, i, k) { 1 } else { -1 };
        out.set_sign(i, k, s);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::faces::trace_faces;
    use crate::label::Label;

    fn k4_tetra() -> RotationSystem {
        let rows = [("0", "1 2 3"), ("1", "0 3 2"), ("2", "0 1 3"), ("3", "0 2 1")];
        RotationSystem::from_rows_orientable(rows.iter().map(|(v, r)| {
            (Label::from(*v), r.split(' ').map(Label::from).collect())
        }))
        .unwrap()
    }

    #[test]
    fn tetrahedron_satisfies_r_star() {
        let s = k4_tetra();
        assert!(check_rule_r_star(&s));
        assert!(check_rule_r(&s));
        assert!(trace_faces(&s).unwrap().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn reversed_row_breaks_r_star_but_not_r() {
        let s = k4_tetra();
        let mut t = s.clone();
        let mut r = t.row(0).to_vec();
        r.reverse();
        t.set_row(0, r);
        assert!(!check_rule_r_star(&t));
        assert!(check_rule_r(&t));
        let signed = rule_r_signatures(&t).unwrap();
        let faces = trace_faces(&signed).unwrap();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.len() == 3));
    }
}
