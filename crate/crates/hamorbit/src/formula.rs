//! Closed-form class counts.
//!
//! Two independent routes to every count are provided: [`class_count`]
//! evaluates the compact formulas directly, and [`count_from_components`]
//! sums the per-family fixed-point totals from [`component_sums`] and
//! divides by the group order.  They must always agree; tests and the
//! verification pass hold them against each other and against brute-force
//! scans.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{EquivKind, GraphKind, Mode};
use crate::ClassCount;

/// `n!` as an arbitrary-precision integer.
pub fn factorial(n: usize) -> ClassCount {
    let mut acc = ClassCount::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// `n!! = n (n-2) (n-4) …`, with `0!! = 1!! = 1`.
pub fn double_factorial(n: usize) -> ClassCount {
    let mut acc = ClassCount::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

/// Euler's totient, by trial-division factorization.
pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let mut phi = n;
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            phi -= phi / p;
            while rest % p == 0 {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    Ok(phi)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// `Σ_{d|n} φ(n/d)² (n/d)^d d!` — the rotation-family fixed-point total
/// for cycles.
pub fn totient_sum(n: usize) -> Result<ClassCount> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let n64 = n as u64;
    let mut total = ClassCount::zero();
    for d in divisors(n64) {
        let q = n64 / d;
        let phi = ClassCount::from(euler_phi(q)?);
        total += &phi * &phi * ClassCount::from(q).pow(d as u32) * factorial(d as usize);
    }
    Ok(total)
}

pub(crate) fn exact_div(numerator: ClassCount, denominator: ClassCount) -> Result<ClassCount> {
    let (q, r) = numerator.div_rem(&denominator);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision {
            numerator,
            denominator,
        })
    }
}

/// Number of classes under `mode`, by the direct closed forms.
pub fn class_count(mode: Mode) -> Result<ClassCount> {
    let n = mode.n();
    let even = n % 2 == 0;
    match (mode.graph(), mode.equiv()) {
        (GraphKind::Path, EquivKind::Similar) => {
            let extra = if even {
                (n / 2 + 1) * double_factorial(n - 2)
            } else {
                double_factorial(n - 1)
            };
            exact_div(factorial(n - 1) + extra, ClassCount::from(4u32))
        }
        (GraphKind::Path, EquivKind::Equivalent) => {
            let extra = if even {
                double_factorial(n - 2)
            } else {
                ClassCount::zero()
            };
            exact_div(factorial(n - 1) + extra, ClassCount::from(2u32))
        }
        (GraphKind::Cycle, EquivKind::Similar) => {
            let extra = if even {
                exact_div(
                    double_factorial(n) * n * (n + 6),
                    ClassCount::from(4u32),
                )?
            } else {
                n * n * double_factorial(n - 1)
            };
            exact_div(totient_sum(n)? + extra, ClassCount::from(4 * n * n))
        }
        (GraphKind::Cycle, EquivKind::Equivalent) => {
            let extra = if even {
                (n / 2) * double_factorial(n)
            } else {
                ClassCount::zero()
            };
            exact_div(totient_sum(n)? + extra, ClassCount::from(2 * n * n))
        }
    }
}

/// Cycle-class counts for an odd prime `p`, where the totient sum
/// collapses to `(p-1)² + (p-1)!`.
pub fn prime_class_count(p: u64, equiv: EquivKind) -> Result<ClassCount> {
    if p <= 2 {
        return Err(Error::POutOfRange { p });
    }
    if !is_prime(p) {
        return Err(Error::NotPrime { p });
    }
    let pm1 = (p - 1) as usize;
    let square = ClassCount::from(p - 1) * ClassCount::from(p - 1);
    match equiv {
        EquivKind::Similar => exact_div(
            square + double_factorial(pm1) * ClassCount::from(p) + factorial(pm1),
            ClassCount::from(4 * p),
        ),
        EquivKind::Equivalent => {
            exact_div(square + factorial(pm1), ClassCount::from(2 * p))
        }
    }
}

/// One family of group elements sharing a reversal/reflection signature:
/// `A*` for paths, `B*` for cycles, numbered 1–4 as (plain, reflected,
/// reversed, both).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    A1,
    A2,
    A3,
    A4,
    B1,
    B2,
    B3,
    B4,
}

impl Component {
    /// The component a group element belongs to, from its graph kind and
    /// reversal/reflection flags.
    pub fn for_family(graph: GraphKind, rev: bool, refl: bool) -> Component {
        match (graph, rev, refl) {
            (GraphKind::Path, false, false) => Component::A1,
            (GraphKind::Path, false, true) => Component::A2,
            (GraphKind::Path, true, false) => Component::A3,
            (GraphKind::Path, true, true) => Component::A4,
            (GraphKind::Cycle, false, false) => Component::B1,
            (GraphKind::Cycle, false, true) => Component::B2,
            (GraphKind::Cycle, true, false) => Component::B3,
            (GraphKind::Cycle, true, true) => Component::B4,
        }
    }

    /// `(reversal, reflection)` signature of the family.
    pub fn family(self) -> (bool, bool) {
        match self {
            Component::A1 | Component::B1 => (false, false),
            Component::A2 | Component::B2 => (false, true),
            Component::A3 | Component::B3 => (true, false),
            Component::A4 | Component::B4 => (true, true),
        }
    }
}

impl std::fmt::Display for Component {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// Per-family fixed-point totals for `mode`, in component order.
/// Equivalent modes have no reflected families, so only the 1/3
/// components appear.
pub fn component_sums(mode: Mode) -> Result<Vec<(Component, ClassCount)>> {
    let n = mode.n();
    let even = n % 2 == 0;
    let half_dblf = |m: usize| {
        if even {
            m * double_factorial(n)
        } else {
            ClassCount::zero()
        }
    };
    let mut sums = match mode.graph() {
        GraphKind::Path => vec![
            (Component::A1, factorial(n)),
            (Component::A2, ClassCount::zero()),
            (
                Component::A3,
                if even {
                    double_factorial(n)
                } else {
                    ClassCount::zero()
                },
            ),
            (
                Component::A4,
                if even {
                    half_dblf(n / 2)
                } else {
                    n * double_factorial(n - 1)
                },
            ),
        ],
        GraphKind::Cycle => vec![
            (Component::B1, totient_sum(n)?),
            (Component::B2, half_dblf(n / 2)),
            (Component::B3, half_dblf(n / 2)),
            (
                Component::B4,
                if even {
                    half_dblf((n / 2 + 1) * (n / 2))
                } else {
                    n * n * double_factorial(n - 1)
                },
            ),
        ],
    };
    if mode.equiv() == EquivKind::Equivalent {
        sums.retain(|(c, _)| !c.family().1);
    }
    Ok(sums)
}

/// Number of classes under `mode`, by summing [`component_sums`] and
/// dividing by the group order.  Must match [`class_count`].
pub fn count_from_components(mode: Mode) -> Result<ClassCount> {
    let total: ClassCount = component_sums(mode)?.into_iter().map(|(_, s)| s).sum();
    exact_div(total, ClassCount::from(mode.group_order()))
}
