//! Vertical-cycle subspaces in homology: orbit decomposition of the letter
//! action, the intersection form, and isotropy / Lagrangian /
//! transposition-Lagrangian tests. All ranks are computed exactly over the
//! rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::invariants::genus;
use crate::perm::{Letter, Permutation};

/// Orbits of the action sending each letter to the letter whose subinterval
/// lands where its own started, together with the homology images of the
/// orbit indicator vectors.
#[derive(Debug, Clone)]
pub struct OrbitDecomposition {
    orbits: Vec<Vec<Letter>>,
    images: Vec<Vec<i64>>,
}

impl OrbitDecomposition {
    pub fn orbits(&self) -> &[Vec<Letter>] {
        &self.orbits
    }

    pub fn orbits_of_size(&self, k: usize) -> Vec<&Vec<Letter>> {
        self.orbits.iter().filter(|o| o.len() == k).collect()
    }

    /// Indicator vector of one orbit in the standard basis.
    pub fn indicator(&self, orbit: usize) -> Vec<i64> {
        let d = self.images[orbit].len();
        let mut e = vec![0i64; d];
        for &x in &self.orbits[orbit] {
            e[x as usize - 1] = 1;
        }
        e
    }

    /// Homology image of one orbit indicator.
    pub fn image(&self, orbit: usize) -> &[i64] {
        &self.images[orbit]
    }

    pub fn images(&self) -> &[Vec<i64>] {
        &self.images
    }
}

/// Cycle decomposition of the letter action of an irreducible permutation.
pub fn orbits(p: &Permutation) -> Result<OrbitDecomposition> {
    if !p.is_irreducible() {
        return Err(Error::Reducible(p.to_string()));
    }
    let d = p.len();
    let mut seen = vec![false; d + 1];
    let mut orbits = Vec::new();
    for start in 1..=d as Letter {
        if seen[start as usize] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut x = start;
        loop {
            seen[x as usize] = true;
            orbit.push(x);
            x = p.position(x) as Letter;
            if x == start {
                break;
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    let omega = p.omega();
    let images = orbits
        .iter()
        .map(|orbit| {
            (0..d)
                .map(|row| orbit.iter().map(|&x| omega.0[row][x as usize - 1]).sum())
                .collect()
        })
        .collect();
    Ok(OrbitDecomposition { orbits, images })
}

/// Value of the symplectic form on the homology images of `u` and `v`:
/// `u^T * Omega * v`.
pub fn intersection(p: &Permutation, u: &[i64], v: &[i64]) -> Result<i64> {
    let d = p.len();
    if u.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: u.len(),
        });
    }
    if v.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: v.len(),
        });
    }
    let omega = p.omega();
    let mut total = 0i64;
    for i in 0..d {
        if u[i] == 0 {
            continue;
        }
        for j in 0..d {
            total += u[i] * omega.0[i][j] * v[j];
        }
    }
    Ok(total)
}

/// Rank of an integer matrix over the rationals, by exact elimination.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from(BigInt::from(x))).collect())
        .collect();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..ncols {
        let pivot = (row..nrows).find(|&r| !m[r][col].is_zero());
        let Some(pr) = pivot else { continue };
        m.swap(row, pr);
        let inv = m[row][col].clone();
        for r in 0..nrows {
            if r != row && !m[r][col].is_zero() {
                let factor = &m[r][col] / &inv;
                for c in col..ncols {
                    let sub = &factor * &m[row][c];
                    m[r][c] = &m[r][c] - sub;
                }
            }
        }
        row += 1;
        rank += 1;
        if row == nrows {
            break;
        }
    }
    rank
}

/// The vertical cycles never intersect each other.
pub fn is_isotropic(p: &Permutation) -> Result<bool> {
    let dec = orbits(p)?;
    let n = dec.orbits().len();
    for i in 0..n {
        for j in i..n {
            if intersection(p, &dec.indicator(i), &dec.indicator(j))? != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Lagrangian: the vertical cycles span a genus-dimensional subspace.
pub fn is_lagrangian(p: &Permutation) -> Result<bool> {
    let dec = orbits(p)?;
    let rank = rational_rank(dec.images());
    Ok(rank == genus(p)? as usize)
}

/// Transposition Lagrangian: the two-cycles alone already span it.
/// Defined only for self-inverse permutations.
pub fn is_transposition_lagrangian(p: &Permutation) -> Result<bool> {
    if !p.is_self_inverse() {
        return Err(Error::NotSelfInverse(p.to_string()));
    }
    let dec = orbits(p)?;
    let rows: Vec<Vec<i64>> = dec
        .orbits()
        .iter()
        .enumerate()
        .filter(|(_, o)| o.len() == 2)
        .map(|(i, _)| dec.image(i).to_vec())
        .collect();
    Ok(rational_rank(&rows) == genus(p)? as usize)
}
