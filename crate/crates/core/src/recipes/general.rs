//! Families whose inputs come from current graphs that are not reproduced
//! here: K_{12s+10} and K_{12s+1} from triangulations of K_n - K3, and the
//! last step for K_{12s+11}. Each recipe checks the partial rows it relies
//! on before touching the embedding, so an input from some other source
//! fails early with the first row that does not fit.

use super::case8::cyclic_match;
use super::triples::rotation_order;
use super::{check_result, min_surface, run, verr, Built};
use crate::error::{Error, Result};
use crate::label::Label;
use crate::surface::Embedding;
use crate::surgery::placement::Move;
use crate::surgery::script::{Recorder, Step};

/// A run of consecutive entries expected somewhere in one row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowCheck {
    pub row: Label,
    pub run: Vec<Label>,
}

/// Residues mod `m` as labels.
struct Zm(i64);

impl Zm {
    fn at(&self, k: i64) -> Label {
        Label::Num(k.rem_euclid(self.0) as u32)
    }
}

fn tag(s: &str) -> Label {
    Label::tag(s)
}

fn check(row: Label, run: Vec<Label>) -> RowCheck {
    RowCheck { row, run }
}

fn has_run(row: &[Label], run: &[Label]) -> bool {
    let d = row.len();
    (0..d).any(|i| run.iter().enumerate().all(|(j, l)| row[(i + j) % d] == *l))
}

/// The first check that fails, if any.
pub fn first_failed(emb: &Embedding, checks: &[RowCheck]) -> Option<RowCheck> {
    checks
        .iter()
        .find(|c| match emb.sys.index_of(&c.row) {
            Some(v) => !has_run(&emb.sys.row_labels(v), &c.run),
            None => true,
        })
        .cloned()
}

/// Runs the checks on `emb` and on its mirror image; returns whichever
/// passes, or the first failure on `emb`.
fn oriented_input(emb: &Embedding, checks: &[RowCheck]) -> Result<Embedding> {
    let Some(bad) = first_failed(emb, checks) else { return Ok(emb.clone()) };
    let mirror = Embedding::new(emb.sys.reflect())?;
    if first_failed(&mirror, checks).is_none() {
        return Ok(mirror);
    }
    let run: Vec<String> = bad.run.iter().map(|l| l.to_string()).collect();
    Err(Error::Precondition(format!("row {} does not contain the run {}", bad.row, run.join(" "))))
}

/// Checks that `emb` is a triangulation of K_n minus the triangle on
/// `letters`, with every other vertex numbered 0..n-4.
fn check_kn_k3(emb: &Embedding, n: usize, letters: [&Label; 3]) -> Result<()> {
    let sys = &emb.sys;
    if sys.vertex_count() != n {
        return Err(Error::Precondition(format!("expected {n} vertices, found {}", sys.vertex_count())));
    }
    for k in 0..(n - 3) as u32 {
        sys.require(&Label::Num(k))?;
    }
    for l in letters {
        sys.require(l)?;
    }
    let mut missing: Vec<(Label, Label)> =
        sys.complement_edges().into_iter().map(|(u, v)| if u > v { (v, u) } else { (u, v) }).collect();
    missing.sort();
    let mut want = vec![
        (letters[0].clone(), letters[1].clone()),
        (letters[0].clone(), letters[2].clone()),
        (letters[1].clone(), letters[2].clone()),
    ];
    for e in want.iter_mut() {
        if e.0 > e.1 {
            std::mem::swap(&mut e.0, &mut e.1);
        }
    }
    want.sort();
    if missing != want {
        return Err(Error::Precondition(format!("expected exactly the triangle on the letters to be missing, found {} missing edges", missing.len())));
    }
    Ok(())
}

fn check_triangular(emb: &Embedding) -> Result<()> {
    if !emb.is_triangular() || !emb.surface.orientable {
        return Err(Error::Precondition("input must be an orientable triangulation".into()));
    }
    Ok(())
}

/// `c = -(5s+3) = 7s+4` in Z_{12s+7}.
pub fn case10_c(s: u32) -> i64 {
    (7 * s as i64 + 4) % (12 * s as i64 + 7)
}

/// Partial rows of the K_{12s+10} - K3 input, in terms of c.
pub fn case10_checks(s: u32) -> Vec<RowCheck> {
    let z = Zm(12 * s as i64 + 7);
    let c = case10_c(s);
    let (x, y, zz) = (tag("x"), tag("y"), tag("z"));
    vec![
        check(z.at(0), vec![z.at(-3 * c), y, z.at(3 * c), z.at(1), z.at(c), zz.clone(), z.at(-c)]),
        check(z.at(0), vec![z.at(-2 * c - 1), z.at(2 * c), x.clone(), z.at(-2 * c)]),
        check(z.at(c + 1), vec![z.at(-c), z.at(3 * c + 1), x.clone()]),
        check(z.at(2 * c), vec![z.at(2 * c + 1), z.at(3 * c), zz.clone()]),
        check(z.at(2 * c + 1), vec![z.at(3 * c + 1), zz, z.at(c + 1)]),
        check(x, vec![z.at(-c), z.at(c), z.at(3 * c), z.at(5 * c)]),
    ]
}

/// Type (6) K_{12s+10}, s >= 1, from a triangulation of K_{12s+10} - K3
/// whose rows match [`case10_checks`].
pub fn case10(emb: &Embedding, s: u32) -> Result<Built> {
    if s == 0 {
        return Err(Error::Domain("this construction needs s >= 1; K10 comes from K10 - P3".into()));
    }
    let n = 12 * s as usize + 10;
    let (x, y, zz) = (tag("x"), tag("y"), tag("z"));
    check_kn_k3(emb, n, [&x, &y, &zz])?;
    let input = oriented_input(emb, &case10_checks(s))?;
    check_triangular(&input)?;
    let z = Zm(12 * s as i64 + 7);
    let c = case10_c(s);
    let zero = z.at(0);
    let mut rec = Recorder::new(input.clone());
    let [p, q, r] = rotation_order(&rec.emb, &zero, [&x, &y, &zz])?;
    rec.step(Step::K3 { v: zero.clone(), x: p, y: q, z: r })?;
    let gon = [
        x.clone(), z.at(2 * c), zero.clone(), z.at(3 * c), y.clone(), z.at(-3 * c),
        zero.clone(), z.at(-c), zz.clone(), z.at(c), zero.clone(), z.at(-2 * c),
    ];
    if !rec.emb.faces.iter().any(|f| cyclic_match(&f.labels(&rec.emb.sys), &gon)) {
        return Err(verr("construction at 0 did not open the expected 12-gon"));
    }
    let pent = [x.clone(), z.at(-c), z.at(c), z.at(3 * c), z.at(5 * c)];
    run(
        &mut rec,
        &[Move::Exchange(x.clone(), z.at(c)), Move::Exchange(x.clone(), z.at(3 * c))],
        "5-gon exchanges",
        |e| e.faces.iter().any(|f| cyclic_match(&f.labels(&e.sys), &pent)),
    )?;
    let surface = min_surface(n)?;
    let moves = [
        Move::Add(zero.clone(), y),
        Move::Add(zero.clone(), zz.clone()),
        Move::Add(zero, x.clone()),
        Move::Exchange(z.at(2 * c), z.at(3 * c)),
        Move::Exchange(z.at(2 * c + 1), zz),
        Move::Exchange(z.at(c + 1), z.at(3 * c + 1)),
        Move::Exchange(z.at(-c), x),
    ];
    run(&mut rec, &moves, "case 10 exchanges", |e| e.embedding_type() == [6] && e.surface == surface)?;
    check_result(&rec.emb, &[6], surface)?;
    Ok(Built::from_recorder(input, rec))
}

/// Partial rows of the K_{12s+1} - K3 input: the s = 2 current graph has
/// its own rows, s >= 3 share one pattern.
pub fn case1_checks(s: u32) -> Vec<RowCheck> {
    let si = s as i64;
    let z = Zm(12 * si - 2);
    let (x, y, zz) = (tag("x"), tag("y"), tag("z"));
    let v = |ks: &[i64]| ks.iter().map(|&k| z.at(k)).collect::<Vec<_>>();
    if s == 2 {
        let mut a = v(&[17, 9]);
        a.extend([zz.clone(), z.at(13)]);
        let mut b = v(&[3]);
        b.extend([y, z.at(19), z.at(21), x.clone(), z.at(1), z.at(20), z.at(14)]);
        return vec![
            check(z.at(0), a),
            check(z.at(0), b),
            check(z.at(3), vec![z.at(2), x, z.at(4)]),
            check(z.at(4), v(&[5, 2, 18])),
            check(z.at(18), vec![z.at(13), z.at(5), zz]),
        ];
    }
    vec![
        check(z.at(0), vec![z.at(6 * si - 3), zz, z.at(6 * si + 1)]),
        check(z.at(0), v(&[6 * si + 4, 6, 6 * si + 5])),
        check(z.at(0), vec![z.at(3), y.clone(), z.at(-3)]),
        check(z.at(0), vec![z.at(-1), x, z.at(1)]),
        check(z.at(6 * si - 3), vec![z.at(6 * si), y, z.at(6 * si - 6)]),
        check(z.at(6 * si - 6), v(&[0, 6 * si, 1])),
    ]
}

/// The exchanges that free one edge of the 12-gon.
pub fn case1_exchanges(s: u32) -> Vec<(Label, Label)> {
    let si = s as i64;
    let z = Zm(12 * si - 2);
    if s == 2 {
        vec![(tag("x"), z.at(3)), (z.at(2), z.at(4)), (z.at(5), z.at(18)), (tag("z"), z.at(13))]
    } else {
        vec![(tag("y"), z.at(6 * si - 3)), (z.at(6 * si - 6), z.at(6 * si)), (z.at(0), z.at(1))]
    }
}

/// Type (6) K_{12s+1}, s >= 2, from a triangulation of K_{12s+1} - K3 whose
/// rows match [`case1_checks`].
pub fn case1(emb: &Embedding, s: u32) -> Result<Built> {
    if s < 2 {
        return Err(Error::Domain("this construction needs s >= 2; K13 has a nearly triangular embedding already".into()));
    }
    let n = 12 * s as usize + 1;
    let (x, y, zz) = (tag("x"), tag("y"), tag("z"));
    check_kn_k3(emb, n, [&x, &y, &zz])?;
    let input = oriented_input(emb, &case1_checks(s))?;
    check_triangular(&input)?;
    let si = s as i64;
    let z = Zm(12 * si - 2);
    let zero = z.at(0);
    let mut rec = Recorder::new(input.clone());
    let [p, q, r] = rotation_order(&rec.emb, &zero, [&x, &y, &zz])?;
    rec.step(Step::K3 { v: zero.clone(), x: p, y: q, z: r })?;
    let gon = [
        zz.clone(), z.at(6 * si - 3), zero.clone(), z.at(-3), y.clone(), z.at(3),
        zero.clone(), z.at(1), x.clone(), z.at(-1), zero.clone(), z.at(6 * si + 1),
    ];
    if !rec.emb.faces.iter().any(|f| cyclic_match(&f.labels(&rec.emb.sys), &gon)) {
        return Err(verr("construction at 0 did not open the expected 12-gon"));
    }
    let surface = min_surface(n)?;
    let mut moves: Vec<Move> = case1_exchanges(s).into_iter().map(|(u, v)| Move::Exchange(u, v)).collect();
    for (u, v) in [(&zero, &x), (&zero, &y), (&zero, &zz), (&x, &y), (&y, &zz), (&x, &zz)] {
        moves.push(Move::Add(u.clone(), v.clone()));
    }
    run(&mut rec, &moves, "case 1 completion", |e| e.embedding_type() == [6] && e.surface == surface)?;
    check_result(&rec.emb, &[6], surface)?;
    Ok(Built::from_recorder(input, rec))
}

/// Structural preconditions for the last step of K_{12s+11}: the lettered
/// vertices a, b, c, x, y see each other only through (a,y), (b,y), (a,x);
/// (0,12s+4), (0,6s+5), (c,12s+4), (b,4) are absent; [a, 12s+4, 6s+5, x]
/// is the one nontriangular face.
pub fn case11_preconditions(emb: &Embedding, s: u32) -> Result<()> {
    if s == 0 {
        return Err(Error::Domain("this construction needs s >= 1".into()));
    }
    let si = s as i64;
    let sys = &emb.sys;
    let n = 12 * s as usize + 11;
    let pre = |m: String| Err(Error::Precondition(m));
    if sys.vertex_count() != n {
        return pre(format!("expected {n} vertices, found {}", sys.vertex_count()));
    }
    let letters = ["a", "b", "c", "x", "y"].map(tag);
    for l in &letters {
        sys.require(l)?;
    }
    let nm = |k: i64| Label::Num(k as u32);
    for k in 0..(12 * si + 6) {
        sys.require(&nm(k))?;
    }
    let present = [("a", "y"), ("b", "y"), ("a", "x")];
    for (i, p) in letters.iter().enumerate() {
        for q in &letters[i + 1..] {
            let want = present.iter().any(|&(u, v)| (tag(u) == *p && tag(v) == *q) || (tag(u) == *q && tag(v) == *p));
            if sys.has_edge_labels(p, q) != want {
                return pre(format!("edge ({p}, {q}) should be {}", if want { "present" } else { "absent" }));
            }
        }
    }
    let absent = [(nm(0), nm(12 * si + 4)), (nm(0), nm(6 * si + 5)), (tag("c"), nm(12 * si + 4)), (tag("b"), nm(4))];
    for (u, v) in &absent {
        if sys.has_edge_labels(u, v) {
            return pre(format!("edge ({u}, {v}) should be absent"));
        }
    }
    let expected = n * (n - 1) / 2 - 7 - absent.len();
    if sys.edge_count() != expected {
        return pre(format!("expected {expected} edges, found {}", sys.edge_count()));
    }
    let quad = [tag("a"), nm(12 * si + 4), nm(6 * si + 5), tag("x")];
    if emb.embedding_type() != [4] || !emb.faces.iter().any(|f| cyclic_match(&f.labels(sys), &quad)) {
        return pre("the only nontriangular face must be [a, 12s+4, 6s+5, x]".into());
    }
    Ok(())
}

/// Type (5) K_{12s+11} from the modified triangulation: construction at 0
/// on a, b, c, eight chords, a second handle between [0, c, y] and the
/// quadrilateral, six more edges, then one exchange of (0, x).
pub fn case11_finish(emb: &Embedding, s: u32) -> Result<Built> {
    case11_preconditions(emb, s)?;
    let si = s as i64;
    let nm = |k: i64| Label::Num(k as u32);
    let [a, b, c, x, y] = ["a", "b", "c", "x", "y"].map(tag);
    let zero = nm(0);
    let n = 12 * s as usize + 11;
    let mut rec = Recorder::new(emb.clone());
    let [p, q, r] = rotation_order(&rec.emb, &zero, [&a, &b, &c])?;
    rec.step(Step::K3 { v: zero.clone(), x: p, y: q, z: r })?;
    let gon = [
        zero.clone(), nm(12 * si + 5), a.clone(), x.clone(), zero.clone(), nm(12 * si + 2),
        b.clone(), y.clone(), zero.clone(), nm(2), c.clone(), nm(4),
    ];
    if !rec.emb.faces.iter().any(|f| cyclic_match(&f.labels(&rec.emb.sys), &gon)) {
        return Err(verr("construction at 0 did not open the expected 12-gon"));
    }
    let first: Vec<Move> = [
        (&zero, &a), (&zero, &b), (&zero, &c), (&a, &b), (&b, &c), (&c, &y), (&b, &nm(4)), (&b, &x),
    ]
    .into_iter()
    .map(|(u, v)| Move::Add(u.clone(), v.clone()))
    .collect();
    let tri = [zero.clone(), c.clone(), y.clone()];
    let quad = [x.clone(), a.clone(), nm(12 * si + 4), nm(6 * si + 5)];
    let has = |e: &Embedding, w: &[Label]| e.faces.iter().any(|f| cyclic_match(&f.labels(&e.sys), w));
    run(&mut rec, &first, "first handle chords", |e| has(e, &tri) && has(e, &quad))?;
    let second = [
        (&a, &c), (&c, &x), (&x, &y), (&zero, &nm(6 * si + 5)), (&zero, &nm(12 * si + 4)), (&c, &nm(12 * si + 4)),
    ];
    let tri_face = rec.emb.faces.iter().find(|f| cyclic_match(&f.labels(&rec.emb.sys), &tri)).expect("checked");
    let quad_face = rec.emb.faces.iter().find(|f| cyclic_match(&f.labels(&rec.emb.sys), &quad)).expect("checked");
    let (ci, ai) = (rec.emb.sys.require(&c)?, rec.emb.sys.require(&a)?);
    let xc = crate::surgery::ops::CornerRef { face: tri_face.hash.clone(), index: tri_face.corners_at(ci)[0] };
    let yc = crate::surgery::ops::CornerRef { face: quad_face.hash.clone(), index: quad_face.corners_at(ai)[0] };
    rec.step(Step::Handle { x: c.clone(), xc, y: a.clone(), yc })?;
    let rest: Vec<Move> = second[1..].iter().map(|(u, v)| Move::Add((*u).clone(), (*v).clone())).collect();
    let q1 = [zero.clone(), nm(6 * si + 5), x.clone(), y.clone()];
    let q2 = [zero.clone(), nm(12 * si + 2), b, x.clone()];
    run(&mut rec, &rest, "second handle chords", |e| e.embedding_type() == [4, 4] && has(e, &q1) && has(e, &q2))?;
    let surface = min_surface(n)?;
    run(&mut rec, &[Move::Exchange(zero, x)], "exchange (0, x)", |e| e.embedding_type() == [5])?;
    check_result(&rec.emb, &[5], surface)?;
    Ok(Built::from_recorder(emb.clone(), rec))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case10_arithmetic() {
        // s = 1: Z_19, c = 11
        let c = case10_c(1);
        assert_eq!(c, 11);
        assert_eq!((2 * c).rem_euclid(19), 3);
        assert_eq!((-3 * c).rem_euclid(19), 5);
        for s in 1..40u32 {
            let m = 12 * s as i64 + 7;
            let c = case10_c(s);
            assert_eq!((-(5 * s as i64 + 3)).rem_euclid(m), c);
            assert_eq!((2 * c).rem_euclid(m), 2 * s as i64 + 1);
            assert_eq!((-3 * c).rem_euclid(m), 3 * s as i64 + 2);
        }
    }

    /// K_22 - K3 rows holding the runs of `keep` and nothing else on purpose.
    fn synthetic_k22_k3(keep: &[RowCheck]) -> Embedding {
        let mut labels: Vec<Label> = (0..19).map(Label::Num).collect();
        labels.extend(["x", "y", "z"].map(tag));
        let letters = |l: &Label| l.is_tag();
        let rows = labels.iter().map(|v| {
            let mut row: Vec<Label> = Vec::new();
            for c in keep.iter().filter(|c| c.row == *v) {
                row.extend(c.run.iter().cloned());
            }
            for u in &labels {
                if u != v && !row.contains(u) && !(letters(u) && letters(v)) {
                    row.push(u.clone());
                }
            }
            (v.clone(), row)
        });
        Embedding::new(crate::rotation::RotationSystem::from_rows_orientable(rows).unwrap()).unwrap()
    }

    #[test]
    fn case10_names_first_bad_row() {
        let checks = case10_checks(1);
        let emb = synthetic_k22_k3(&checks[..2]);
        match case10(&emb, 1) {
            Err(Error::Precondition(m)) => assert!(m.starts_with("row 12 "), "{m}"),
            other => panic!("{other:?}"),
        }
        // every run present: rows pass, triangularity is checked next
        let emb = synthetic_k22_k3(&checks);
        assert!(first_failed(&emb, &checks).is_none());
        match case10(&emb, 1) {
            Err(Error::Precondition(m)) => assert!(m.contains("triangulation"), "{m}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn runs_wrap_around() {
        let row: Vec<Label> = [1, 2, 3, 4].map(Label::Num).to_vec();
        assert!(has_run(&row, &[Label::Num(4), Label::Num(1)]));
        assert!(!has_run(&row, &[Label::Num(1), Label::Num(3)]));
    }
}
