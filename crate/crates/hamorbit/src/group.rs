//! The acting groups and their action on permutation strings.
//!
//! For each choice of graph kind (path or cycle) and equivalence kind
//! (similar or equivalent) the acting group is a direct product: a string
//! part generated by the cyclic shift `c` (cycles only) and the reversal
//! `v`, which permutes positions without changing the drawn figure, and a
//! geometric part generated by the label rotation `r` and the label
//! reflection `s` (similar only), which rotates or mirrors the figure.
//!
//! Elements are kept in the normal form `(c^shift v^rev, s^refl r^rot)`,
//! which is unique, and act on the left: the right-hand factor of a word
//! applies first. Concretely `r` adds 1 to every label mod n and `s`
//! negates every label mod n, so the reflection axis passes through
//! vertex 0.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::PermString;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphKind {
    Path,
    Cycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EquivKind {
    /// Equal up to rotation or reflection of the drawn figure.
    Similar,
    /// Equal up to rotation only.
    Equivalent,
}

/// One of the four counting problems, together with its size `n >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mode {
    graph: GraphKind,
    equiv: EquivKind,
    n: usize,
}

impl Mode {
    pub fn new(graph: GraphKind, equiv: EquivKind, n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::NTooSmall { n });
        }
        Ok(Mode { graph, equiv, n })
    }

    pub fn graph(&self) -> GraphKind {
        self.graph
    }

    pub fn equiv(&self) -> EquivKind {
        self.equiv
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// |Γ|: 4n, 2n, 4n² or 2n² depending on the two kind choices.
    pub fn group_order(&self) -> u64 {
        let n = self.n as u64;
        let string_part = match self.graph {
            GraphKind::Path => 2,
            GraphKind::Cycle => 2 * n,
        };
        let geometric_part = match self.equiv {
            EquivKind::Similar => 2 * n,
            EquivKind::Equivalent => n,
        };
        string_part * geometric_part
    }

    /// All four modes for a given `n`, in the conventional report order.
    pub fn all(n: usize) -> Result<[Mode; 4]> {
        Ok([
            Mode::new(GraphKind::Path, EquivKind::Similar, n)?,
            Mode::new(GraphKind::Path, EquivKind::Equivalent, n)?,
            Mode::new(GraphKind::Cycle, EquivKind::Similar, n)?,
            Mode::new(GraphKind::Cycle, EquivKind::Equivalent, n)?,
        ])
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = match self.graph {
            GraphKind::Path => "path",
            GraphKind::Cycle => "cycle",
        };
        let e = match self.equiv {
            EquivKind::Similar => "similar",
            EquivKind::Equivalent => "equivalent",
        };
        write!(f, "{g}/{e} n={}", self.n)
    }
}

/// A group element in the normal form `(c^shift v^rev, s^refl r^rot)`.
///
/// Field order matters: the derived ordering sorts elements by
/// `(rev, refl)` family first, which is the grouping the component sums
/// are stated in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    mode: Mode,
    rev: bool,
    refl: bool,
    shift: usize,
    rot: usize,
}

impl GroupElement {
    /// Builds `(c^shift v^rev, s^refl r^rot)`, reducing exponents mod n.
    /// Rejects generators the mode does not have.
    pub fn new(mode: Mode, shift: usize, rev: bool, rot: usize, refl: bool) -> Result<Self> {
        let n = mode.n;
        let shift = shift % n;
        let rot = rot % n;
        if shift != 0 && mode.graph == GraphKind::Path {
            return Err(Error::GeneratorUnavailable {
                what: "cyclic shift c acts only in cycle mode",
            });
        }
        if refl && mode.equiv == EquivKind::Equivalent {
            return Err(Error::GeneratorUnavailable {
                what: "reflection s acts only in similar mode",
            });
        }
        Ok(GroupElement {
            mode,
            rev,
            refl,
            shift,
            rot,
        })
    }

    pub fn identity(mode: Mode) -> Self {
        GroupElement {
            mode,
            rev: false,
            refl: false,
            shift: 0,
            rot: 0,
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn is_reversal(&self) -> bool {
        self.rev
    }

    pub fn rot(&self) -> usize {
        self.rot
    }

    pub fn is_reflection(&self) -> bool {
        self.refl
    }

    pub fn is_identity(&self) -> bool {
        !self.rev && !self.refl && self.shift == 0 && self.rot == 0
    }

    /// Position the entry at output position `i` is read from.
    #[inline]
    pub(crate) fn src_index(&self, i: usize) -> usize {
        let n = self.mode.n;
        let t = (i + self.shift) % n;
        if self.rev {
            n - 1 - t
        } else {
            t
        }
    }

    /// Image of label `a` under the geometric part (`r^rot` first, then
    /// `s` if set).
    #[inline]
    pub(crate) fn map_label(&self, a: u8) -> u8 {
        let n = self.mode.n;
        let b = (a as usize + self.rot) % n;
        if self.refl {
            ((n - b) % n) as u8
        } else {
            b as u8
        }
    }

    #[inline]
    pub(crate) fn apply_into(&self, src: &[u8], dst: &mut [u8]) {
        debug_assert_eq!(src.len(), self.mode.n);
        debug_assert_eq!(dst.len(), self.mode.n);
        for (i, d) in dst.iter_mut().enumerate() {
            *d = self.map_label(src[self.src_index(i)]);
        }
    }

    /// Acts on a string. Position maps commute with label maps, so the
    /// two halves can be applied in either order; positions go first here.
    pub fn apply(&self, x: &PermString) -> Result<PermString> {
        if x.len() != self.mode.n {
            return Err(Error::LengthMismatch {
                len: x.len(),
                n: self.mode.n,
            });
        }
        let mut out = vec![0u8; self.mode.n];
        self.apply_into(x.entries(), &mut out);
        Ok(PermString::from_vec_unchecked(out))
    }

    /// Group product `self · other`, renormalized so that
    /// `compose(g, h).apply(x) == g.apply(h.apply(x))`.
    ///
    /// Moving a word past a reversal or reflection inverts it:
    /// `v c^b = c^{-b} v` and `r^j s = s r^{-j}`.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.mode != other.mode {
            return Err(Error::ModeMismatch);
        }
        let n = self.mode.n;
        let shift = if self.rev {
            (self.shift + n - other.shift) % n
        } else {
            (self.shift + other.shift) % n
        };
        let rot = if other.refl {
            (other.rot + n - self.rot) % n
        } else {
            (self.rot + other.rot) % n
        };
        Ok(GroupElement {
            mode: self.mode,
            rev: self.rev ^ other.rev,
            refl: self.refl ^ other.refl,
            shift,
            rot,
        })
    }

    pub fn inverse(&self) -> GroupElement {
        let n = self.mode.n;
        GroupElement {
            mode: self.mode,
            rev: self.rev,
            refl: self.refl,
            // c^a v and s r^k are involutions; pure shifts and rotations
            // invert by negating the exponent.
            shift: if self.rev { self.shift } else { (n - self.shift) % n },
            rot: if self.refl { self.rot } else { (n - self.rot) % n },
        }
    }

    /// Multiplicative order; small (divides 2n), found by iteration.
    pub fn order(&self) -> usize {
        let mut g = *self;
        let mut k = 1;
        while !g.is_identity() {
            g = g.compose(self).expect("same mode");
            k += 1;
        }
        k
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut string_part = String::new();
        if self.shift > 0 {
            string_part.push_str(&format!("c^{}", self.shift));
        }
        if self.rev {
            string_part.push('v');
        }
        if string_part.is_empty() {
            string_part.push('1');
        }
        let mut geo_part = String::new();
        if self.refl {
            geo_part.push('s');
        }
        if self.rot > 0 {
            geo_part.push_str(&format!("r^{}", self.rot));
        }
        if geo_part.is_empty() {
            geo_part.push('1');
        }
        write!(f, "({string_part}, {geo_part})")
    }
}

/// Every element of the acting group exactly once, in family-major order:
/// plain elements, then `s`-elements, then `v`-elements, then `vs`-elements,
/// with shifts and rotations ascending inside each family.
pub fn elements(mode: Mode) -> Vec<GroupElement> {
    let n = mode.n;
    let shifts = match mode.graph {
        GraphKind::Path => 1,
        GraphKind::Cycle => n,
    };
    let mut out = Vec::with_capacity(mode.group_order() as usize);
    for rev in [false, true] {
        for refl in [false, true] {
            if refl && mode.equiv == EquivKind::Equivalent {
                continue;
            }
            for shift in 0..shifts {
                for rot in 0..n {
                    out.push(GroupElement {
                        mode,
                        rev,
                        refl,
                        shift,
                        rot,
                    });
                }
            }
        }
    }
    out
}
