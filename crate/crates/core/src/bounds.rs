//! Degree-based upper bounds on forcing numbers and the extremal families
//! that attain them.
//!
//! Bounds are kept as unreduced integer fractions and compared by
//! cross-multiplication, so equality tests are exact.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{BoundError, GraphError};
use crate::graph::Graph;

/// An unreduced fraction with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
}

impl Fraction {
    fn new(num: i64, den: i64) -> Self {
        debug_assert!(den > 0);
        Fraction { num, den }
    }

    /// Compares `value` against the fraction without dividing.
    pub fn cmp_integer(&self, value: i64) -> Ordering {
        (value * self.den).cmp(&self.num)
    }

    pub fn cmp_fraction(&self, other: &Fraction) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }

    pub fn is_integer(&self) -> bool {
        self.num % self.den == 0
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// `((Δ-2)n + 2) / (Δ + k - 2)`, the upper bound on `F_k(G)` for
/// k-connected graphs on more than `k` vertices.
pub fn amos_bound(n: usize, max_degree: usize, k: usize) -> Result<Fraction, BoundError> {
    if max_degree < 2 {
        return Err(BoundError::DegreeTooSmall(max_degree));
    }
    if k == 0 {
        return Err(BoundError::ZeroK);
    }
    let (n, d, k) = (n as i64, max_degree as i64, k as i64);
    Ok(Fraction::new((d - 2) * n + 2, d + k - 2))
}

/// `((Δ-2)n - (Δ-δ) + 2) / (Δ - 1)`, the upper bound on `Z(G)` for connected
/// graphs that also uses the minimum degree.
pub fn caro_pepper_bound(
    n: usize,
    max_degree: usize,
    min_degree: usize,
) -> Result<Fraction, BoundError> {
    if max_degree < 2 {
        return Err(BoundError::DegreeTooSmall(max_degree));
    }
    if min_degree == 0 || min_degree > max_degree {
        return Err(BoundError::MinDegreeOutOfRange {
            min: min_degree,
            max: max_degree,
        });
    }
    let (n, d, m) = (n as i64, max_degree as i64, min_degree as i64);
    Ok(Fraction::new((d - 2) * n - (d - m) + 2, d - 1))
}

/// Whether `Z (Δ-1) = (Δ-2) n + 2` in exact integer arithmetic.
pub fn check_amos_equality(z: usize, n: usize, max_degree: usize) -> bool {
    if max_degree < 2 {
        return false;
    }
    let (z, n, d) = (z as i64, n as i64, max_degree as i64);
    z * (d - 1) == (d - 2) * n + 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExtremalTag {
    Cycle,
    Complete,
    BalancedCompleteBipartite,
    None,
}

/// Membership in `{C_n, K_{Δ+1}, K_{Δ,Δ}}`. `parameter` is `n` for cycles
/// and `Δ` for the other two families, absent for `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalClass {
    pub tag: ExtremalTag,
    pub parameter: Option<usize>,
}

impl ExtremalClass {
    pub const NONE: ExtremalClass = ExtremalClass {
        tag: ExtremalTag::None,
        parameter: None,
    };

    pub fn is_extremal(&self) -> bool {
        self.tag != ExtremalTag::None
    }
}

impl fmt::Display for ExtremalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.tag, self.parameter) {
            (ExtremalTag::Cycle, Some(n)) => write!(f, "C{n}"),
            (ExtremalTag::Complete, Some(d)) => write!(f, "K{}", d + 1),
            (ExtremalTag::BalancedCompleteBipartite, Some(d)) => write!(f, "K{d},{d}"),
            _ => write!(f, "none"),
        }
    }
}

/// Structural classification. Overlaps resolve as
/// `Complete > BalancedCompleteBipartite > Cycle`, so `K_3` is `Complete` and
/// `C_4` is `BalancedCompleteBipartite`. Graphs with `Δ < 2` are `None`.
pub fn classify_extremal(g: &Graph) -> Result<ExtremalClass, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.order();
    let (max, min) = (g.max_degree(), g.min_degree());
    if max < 2 || max != min {
        return Ok(ExtremalClass::NONE);
    }
    let d = max;
    if d == n - 1 {
        return Ok(ExtremalClass {
            tag: ExtremalTag::Complete,
            parameter: Some(d),
        });
    }
    if n == 2 * d {
        if let Some(side) = g.bipartition() {
            // a d-regular bipartite graph with parts of size d is complete bipartite
            if side.len() == d {
                return Ok(ExtremalClass {
                    tag: ExtremalTag::BalancedCompleteBipartite,
                    parameter: Some(d),
                });
            }
        }
    }
    if d == 2 {
        return Ok(ExtremalClass {
            tag: ExtremalTag::Cycle,
            parameter: Some(n),
        });
    }
    Ok(ExtremalClass::NONE)
}

/// Both bounds and the equality flag for one graph and forcing parameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub k: usize,
    pub amos_num: i64,
    pub amos_den: i64,
    pub caro_num: i64,
    pub caro_den: i64,
    /// `F_k (Δ+k-2) = (Δ-2)n + 2`; only meaningful when `f_k` is known.
    pub meets_amos_equality: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_k: Option<usize>,
}

/// Evaluates both bounds for `g`. Pass the forcing number to fill in the
/// equality flag.
pub fn bound_report(g: &Graph, k: usize, f_k: Option<usize>) -> Result<BoundReport, BoundError> {
    let stats = g.degree_stats();
    let amos = amos_bound(g.order(), stats.max, k)?;
    let caro = caro_pepper_bound(g.order(), stats.max, stats.min)?;
    let meets = f_k.is_some_and(|f| amos.cmp_integer(f as i64) == Ordering::Equal);
    Ok(BoundReport {
        n: g.order(),
        max_degree: stats.max,
        min_degree: stats.min,
        k,
        amos_num: amos.num,
        amos_den: amos.den,
        caro_num: caro.num,
        caro_den: caro.den,
        meets_amos_equality: meets,
        f_k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, cycle, path, petersen, star};

    #[test]
    fn amos_examples() {
        assert_eq!(amos_bound(5, 2, 1).unwrap(), Fraction { num: 2, den: 1 });
        let k4 = amos_bound(4, 3, 1).unwrap();
        assert_eq!(k4, Fraction { num: 6, den: 2 });
        assert_eq!(k4.cmp_integer(3), Ordering::Equal);
        let pet = amos_bound(10, 3, 1).unwrap();
        assert_eq!(pet, Fraction { num: 12, den: 2 });
        assert_eq!(pet.cmp_integer(5), Ordering::Less);
        assert_eq!(amos_bound(4, 1, 1), Err(BoundError::DegreeTooSmall(1)));
        assert_eq!(amos_bound(4, 3, 0), Err(BoundError::ZeroK));
    }

    #[test]
    fn caro_pepper_examples() {
        assert_eq!(
            caro_pepper_bound(4, 3, 1).unwrap(),
            Fraction { num: 4, den: 2 }
        );
        assert_eq!(
            caro_pepper_bound(10, 3, 3).unwrap(),
            Fraction { num: 12, den: 2 }
        );
        for n in 3..12 {
            for d in 2..n {
                assert_eq!(
                    caro_pepper_bound(n, d, d).unwrap(),
                    amos_bound(n, d, 1).unwrap()
                );
            }
        }
        assert!(caro_pepper_bound(4, 1, 1).is_err());
        assert!(caro_pepper_bound(4, 3, 0).is_err());
        assert!(caro_pepper_bound(4, 3, 4).is_err());
    }

    #[test]
    fn equality_examples() {
        assert!(check_amos_equality(2, 7, 2));
        assert!(check_amos_equality(4, 6, 3));
        assert!(!check_amos_equality(5, 10, 3));
        assert!(!check_amos_equality(1, 2, 1));
    }

    #[test]
    fn classification() {
        let class = |g: &Graph| classify_extremal(g).unwrap();
        assert_eq!(
            class(&cycle(7).unwrap()),
            ExtremalClass {
                tag: ExtremalTag::Cycle,
                parameter: Some(7)
            }
        );
        assert_eq!(
            class(&complete_bipartite(4, 4).unwrap()),
            ExtremalClass {
                tag: ExtremalTag::BalancedCompleteBipartite,
                parameter: Some(4)
            }
        );
        assert_eq!(class(&petersen()), ExtremalClass::NONE);
        assert_eq!(class(&complete(3).unwrap()).tag, ExtremalTag::Complete);
        assert_eq!(
            class(&cycle(4).unwrap()).tag,
            ExtremalTag::BalancedCompleteBipartite
        );
        assert_eq!(class(&complete(2).unwrap()), ExtremalClass::NONE);
        assert_eq!(class(&star(3).unwrap()), ExtremalClass::NONE);
        assert_eq!(class(&path(4).unwrap()), ExtremalClass::NONE);
        assert_eq!(
            class(&complete_bipartite(3, 4).unwrap()),
            ExtremalClass::NONE
        );
        // the 3-prism is 3-regular on 6 vertices but not bipartite
        let prism = Graph::from_edges(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_eq!(class(&prism), ExtremalClass::NONE);
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(classify_extremal(&two), Err(GraphError::Disconnected));
        assert_eq!(class(&complete(5).unwrap()).to_string(), "K5");
        assert_eq!(class(&cycle(4).unwrap()).to_string(), "K2,2");
    }

    #[test]
    fn report_for_k44() {
        let r = bound_report(&complete_bipartite(4, 4).unwrap(), 1, Some(6)).unwrap();
        assert_eq!((r.amos_num, r.amos_den), (18, 3));
        assert!(r.meets_amos_equality);
        assert_eq!((r.caro_num, r.caro_den), (18, 3));
    }
}
