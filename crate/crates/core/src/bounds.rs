//! Closed-form genus quantities for complete graphs.

use serde::Serialize;

use crate::error::{Error, Result};

/// Genus data for `K_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenusBounds {
    pub n: u64,
    /// Orientable genus `ceil((n-3)(n-4)/12)`.
    pub orientable: u64,
    /// Nonorientable genus, with the exception at `n = 7`.
    pub nonorientable: u64,
    /// Least `t >= 0` with `2t = -(n-3)(n-4) (mod 12)`; the excess
    /// `sum(a_i - 3)` of any minimum genus embedding.
    pub t: u64,
    /// Maximum genus `floor(beta / 2)`, `beta = |E| - |V| + 1`.
    pub max_genus: u64,
    /// Faces in a maximum genus embedding: 1 or 2.
    pub max_genus_faces: u64,
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

pub fn genus_bounds(n: u64) -> Result<GenusBounds> {
    if n < 3 {
        return Err(Error::Domain(format!("genus bounds need n >= 3, got {n}")));
    }
    let p = if n <= 4 { 0 } else { (n - 3) * (n - 4) };
    let t = (0..6).find(|t| (2 * t + p) % 12 == 0).expect("2t covers every even residue");
    let nonorientable = if n == 7 { 3 } else { ceil_div(p, 6) };
    let edges = n * (n - 1) / 2;
    let beta = edges + 1 - n;
    let max_genus_faces = if matches!(n % 4, 1 | 2) { 1 } else { 2 };
    Ok(GenusBounds {
        n,
        orientable: ceil_div(p, 12),
        nonorientable,
        t,
        max_genus: beta / 2,
        max_genus_faces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let b = genus_bounds(7).unwrap();
        assert_eq!((b.orientable, b.t, b.nonorientable), (1, 0, 3));
        assert_eq!(genus_bounds(14).unwrap().t, 5);
        let b = genus_bounds(8).unwrap();
        assert_eq!((b.orientable, b.t), (2, 2));
        assert!(genus_bounds(2).is_err());
    }

    #[test]
    fn t_by_residue() {
        // t as a function of n mod 12, from 2t + (n-3)(n-4) = 0 mod 12
        let table = [0, 3, 5, 0, 0, 5, 3, 0, 2, 3, 3, 2];
        for n in 3..200u64 {
            let b = genus_bounds(n).unwrap();
            assert_eq!(b.t, table[(n % 12) as usize], "n = {n}");
            assert!([0, 2, 3, 5].contains(&b.t));
        }
    }

    #[test]
    fn max_genus_faces_parity() {
        for n in 3..40u64 {
            let b = genus_bounds(n).unwrap();
            let e = n * (n - 1) / 2;
            // V - E + F = 2 - 2g with g = floor(beta/2)
            let f = 2 - 2 * b.max_genus as i64 - n as i64 + e as i64;
            assert_eq!(f as u64, b.max_genus_faces);
        }
    }
}
