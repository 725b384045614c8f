//! Closed-form arithmetic for diameter-2 Moore problems: the three Moore
//! bounds, Bosák's admissibility condition, the forced number of generators
//! inside an index-2 subgroup, and the abelian index-2 exclusion.
//!
//! Everything is exact integer arithmetic. Square roots are only ever
//! compared after squaring.

use std::fmt;

use crate::error::DomainError;

/// Order of a diameter-2 mixed Moore graph: `(z+r)² + z + 1`.
pub fn moore_bound_mixed(r: u64, z: u64) -> u64 {
    (z + r).pow(2) + z + 1
}

/// Undirected Moore bound `1 + d((d-1)^k - 1)/(d-2)` for `d > 2`, `k > 1`.
pub fn moore_bound_undirected(d: u64, k: u32) -> Result<u64, DomainError> {
    const FORMULA: &str = "undirected Moore bound";
    if d <= 2 || k <= 1 {
        return Err(DomainError::OutOfDomain {
            formula: FORMULA,
            requirement: "d > 2 and k > 1",
        });
    }
    let overflow = DomainError::Overflow { formula: FORMULA };
    let power = (d - 1).checked_pow(k).ok_or(overflow.clone())?;
    let numerator = d.checked_mul(power - 1).ok_or(overflow)?;
    Ok(1 + numerator / (d - 2))
}

/// Directed Moore bound `(d^(k+1) - 1)/(d - 1)` for `d > 1`, `k > 1`.
pub fn moore_bound_directed(d: u64, k: u32) -> Result<u64, DomainError> {
    const FORMULA: &str = "directed Moore bound";
    if d <= 1 || k <= 1 {
        return Err(DomainError::OutOfDomain {
            formula: FORMULA,
            requirement: "d > 1 and k > 1",
        });
    }
    let power = d
        .checked_pow(k + 1)
        .ok_or(DomainError::Overflow { formula: FORMULA })?;
    Ok((power - 1) / (d - 1))
}

fn exact_sqrt(x: u64) -> Option<u64> {
    let root = x.isqrt();
    (root * root == x).then_some(root)
}

/// The odd integer `c` with `r = (c²+3)/4` and `c | (4z-3)(4z+5)`, if any.
pub fn bosak_feasible(r: u64, z: u64) -> Option<u64> {
    if r == 0 || z == 0 {
        return None;
    }
    let c = exact_sqrt(4 * r - 3)?;
    let product = (4 * z - 3) * (4 * z + 5);
    product.is_multiple_of(c).then_some(c)
}

/// The admissible values of `s1 + s2`, the number of generators that must
/// lie in an index-2 subgroup: `(2(z+r) - 1 ± √(4r-3)) / 4`, keeping only
/// non-negative integers not exceeding `r + z`.
pub fn index2_split(r: u64, z: u64) -> Vec<u64> {
    let Some(c) = (r >= 1).then(|| exact_sqrt(4 * r - 3)).flatten() else {
        return Vec::new();
    };
    let base = 2 * (z + r) as i64 - 1;
    let mut splits: Vec<u64> = [base - c as i64, base + c as i64]
        .into_iter()
        .filter(|&v| v >= 0 && v % 4 == 0)
        .map(|v| (v / 4) as u64)
        .filter(|&s| s <= r + z)
        .collect();
    splits.sort_unstable();
    splits.dedup();
    splits
}

/// True iff `2(z+r) - √(4r-3) > 9`, in which case no group with an abelian
/// subgroup of index 2 can host a Moore Cayley graph with these degrees.
/// Always false for `r = 0`.
pub fn abelian_index2_excluded(r: u64, z: u64) -> bool {
    if r == 0 {
        return false;
    }
    // 2(z+r) - 9 > √(4r-3)  ⇔  lhs > 0 and lhs² > 4r-3
    let lhs = 2 * (z + r) as i64 - 9;
    lhs > 0 && (lhs as u64).pow(2) > 4 * r - 3
}

/// True iff `n = p^k` for a prime `p` and `k ≥ 1`.
pub fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..)
        .take_while(|d| d * d <= n)
        .find(|d| n.is_multiple_of(*d))
        .unwrap_or(n);
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// The Kautz mixed Moore graph with `r = 1` and out-degree `z` is a Cayley
/// graph exactly when `z + 2` is a prime power.
pub fn kautz_is_cayley(z: u64) -> bool {
    is_prime_power(z + 2)
}

/// A Bosák-admissible parameter set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FeasibleParams {
    pub r: u64,
    pub z: u64,
    pub n: u64,
    pub c: u64,
    pub splits: Vec<u64>,
}

impl FeasibleParams {
    /// Builds the parameter set for `(r, z)` if Bosák's condition holds.
    pub fn new(r: u64, z: u64) -> Option<Self> {
        let c = bosak_feasible(r, z)?;
        Some(FeasibleParams {
            r,
            z,
            n: moore_bound_mixed(r, z),
            c,
            splits: index2_split(r, z),
        })
    }

    /// Total generator count `r + z`.
    pub fn degree(&self) -> u64 {
        self.r + self.z
    }
}

impl fmt::Display for FeasibleParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let splits: Vec<String> = self.splits.iter().map(u64::to_string).collect();
        write!(
            f,
            "{} {} {} {} {}",
            self.n,
            self.r,
            self.z,
            self.c,
            splits.join(",")
        )
    }
}

/// Every feasible `(r, z)` with Moore order at most `max_n`, ascending by
/// order (ties by `r`).
pub fn enumerate_feasible(max_n: u64) -> Vec<FeasibleParams> {
    let mut out = Vec::new();
    for c in (1u64..).step_by(2) {
        // c odd, so c² + 3 is a multiple of 4.
        let r = (c * c + 3) / 4;
        if moore_bound_mixed(r, 1) > max_n {
            break;
        }
        for z in 1.. {
            if moore_bound_mixed(r, z) > max_n {
                break;
            }
            if let Some(params) = FeasibleParams::new(r, z) {
                out.push(params);
            }
        }
    }
    out.sort_by_key(|p| (p.n, p.r));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_bound_examples() {
        assert_eq!(moore_bound_mixed(3, 1), 18);
        assert_eq!(moore_bound_mixed(1, 1), 6);
        assert_eq!(moore_bound_mixed(21, 1), 486);
    }

    #[test]
    fn undirected_bound_examples() {
        assert_eq!(moore_bound_undirected(3, 2), Ok(10));
        assert_eq!(moore_bound_undirected(7, 2), Ok(50));
        assert_eq!(moore_bound_undirected(57, 2), Ok(3250));
        assert!(matches!(
            moore_bound_undirected(2, 2),
            Err(DomainError::OutOfDomain { .. })
        ));
        assert!(matches!(
            moore_bound_undirected(3, 1),
            Err(DomainError::OutOfDomain { .. })
        ));
        assert!(matches!(
            moore_bound_undirected(1 << 40, 5),
            Err(DomainError::Overflow { .. })
        ));
    }

    #[test]
    fn directed_bound_examples() {
        assert_eq!(moore_bound_directed(2, 2), Ok(7));
        assert_eq!(moore_bound_directed(2, 3), Ok(15));
        assert_eq!(moore_bound_directed(3, 2), Ok(13));
        assert!(moore_bound_directed(1, 2).is_err());
    }

    #[test]
    fn bosak_examples() {
        assert_eq!(bosak_feasible(3, 1), Some(3));
        assert_eq!(bosak_feasible(3, 2), None);
        assert!((1..200).all(|z| bosak_feasible(5, z).is_none()));
        assert!((1..200).all(|z| bosak_feasible(1, z) == Some(1)));
        assert_eq!(bosak_feasible(0, 1), None);
    }

    #[test]
    fn enumerate_examples() {
        let rows: Vec<(u64, u64, u64)> = enumerate_feasible(20)
            .iter()
            .map(|p| (p.r, p.z, p.n))
            .collect();
        assert_eq!(rows, vec![(1, 1, 6), (1, 2, 12), (3, 1, 18), (1, 3, 20)]);
        let wide: Vec<(u64, u64, u64)> = enumerate_feasible(110)
            .iter()
            .map(|p| (p.r, p.z, p.n))
            .collect();
        for row in [(7, 2, 84), (3, 6, 88), (3, 7, 108)] {
            assert!(wide.contains(&row), "{row:?}");
        }
        assert!(enumerate_feasible(5).is_empty());
    }

    #[test]
    fn split_examples() {
        assert_eq!(index2_split(3, 1), vec![1]);
        assert_eq!(index2_split(3, 7), vec![4]);
        assert_eq!(index2_split(7, 2), vec![3]);
        assert_eq!(index2_split(5, 1), Vec::<u64>::new());
    }

    #[test]
    fn abelian_exclusion_examples() {
        assert!(!abelian_index2_excluded(3, 1));
        assert!(abelian_index2_excluded(3, 7));
        assert!(abelian_index2_excluded(7, 2));
        // Boundary: 2(3+3) - 3 = 9 is not > 9.
        assert!(!abelian_index2_excluded(3, 3));
        // Non-square 4r-3: r = 2 gives √5 ≈ 2.236; 2(2+4) - √5 ≈ 9.76 > 9.
        assert!(abelian_index2_excluded(2, 4));
        assert!(!abelian_index2_excluded(2, 3));
        assert!(!abelian_index2_excluded(0, 100));
    }

    #[test]
    fn kautz_cayley_examples() {
        assert!(kautz_is_cayley(1));
        assert!(!kautz_is_cayley(4));
        assert!(kautz_is_cayley(14));
        assert!(is_prime_power(2));
        assert!(is_prime_power(27));
        assert!(!is_prime_power(1));
        assert!(!is_prime_power(12));
    }

    #[test]
    fn r_one_rows_are_every_z() {
        let zs: Vec<u64> = enumerate_feasible(1000)
            .iter()
            .filter(|p| p.r == 1)
            .map(|p| p.z)
            .collect();
        let expected: Vec<u64> = (1..)
            .take_while(|&z| moore_bound_mixed(1, z) <= 1000)
            .collect();
        assert_eq!(zs, expected);
        assert!((1..100).all(|z| moore_bound_mixed(1, z) == (z + 1) * (z + 2)));
    }
}
