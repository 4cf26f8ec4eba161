//! Set systems over small ground sets, twists, widths and the symmetric
//! exchange axiom.
//!
//! A set system is a ground set `[n]` together with a family of subsets
//! (the feasible sets). Subsets are packed into `u64` bit-vectors, so the
//! ground set is capped at 64 elements. Elements are 1-based everywhere in
//! the public API; bit `i` stands for element `i + 1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A subset of a ground set, packed into a 64-bit word.
///
/// Ordering is canonical: first by cardinality, then by numeric bit value.
/// "Canonically first" throughout the crate means minimal in this order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset {
    bits: u64,
}

impl Subset {
    pub const EMPTY: Subset = Subset { bits: 0 };

    pub fn from_bits(bits: u64) -> Subset {
        Subset { bits }
    }

    /// Builds a subset from 1-based element labels, validating against the
    /// ground size. Duplicates are merged silently.
    pub fn from_elements(elements: &[u32], ground: u32) -> Result<Subset> {
        let mut bits = 0u64;
        for &e in elements {
            if e == 0 || e > ground {
                return Err(Error::OutOfRangeElement { element: e, ground });
            }
            bits |= 1u64 << (e - 1);
        }
        Ok(Subset { bits })
    }

    pub fn singleton(element: u32) -> Subset {
        debug_assert!(element >= 1 && element <= 64);
        Subset {
            bits: 1u64 << (element - 1),
        }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn len(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, element: u32) -> bool {
        element >= 1 && element <= 64 && self.bits & (1u64 << (element - 1)) != 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn sym_diff(self, other: Subset) -> Subset {
        Subset {
            bits: self.bits ^ other.bits,
        }
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset {
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset {
            bits: self.bits & other.bits,
        }
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset {
            bits: self.bits & !other.bits,
        }
    }

    pub fn insert(self, element: u32) -> Subset {
        self.union(Subset::singleton(element))
    }

    pub fn remove(self, element: u32) -> Subset {
        self.minus(Subset::singleton(element))
    }

    /// 1-based element labels in increasing order.
    pub fn elements(self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn iter(self) -> impl Iterator<Item = u32> {
        let bits = self.bits;
        (0..64u32).filter(move |i| bits & (1u64 << i) != 0).map(|i| i + 1)
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.len(), self.bits).cmp(&(other.len(), other.bits))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// The rank data of a proper set system: extreme feasible cardinalities and
/// their difference, the width.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WidthSummary {
    pub r_min: u32,
    pub r_max: u32,
    pub width: u32,
}

/// Outcome of the symmetric exchange check: either the axiom holds, or a
/// concrete witness triple `(X, Y, u)` for which no exchange element exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomVerdict {
    Holds,
    Witness { x: Subset, y: Subset, u: u32 },
}

impl AxiomVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, AxiomVerdict::Holds)
    }
}

/// A set system: ground size plus a deduplicated family of subsets kept in
/// canonical (cardinality, numeric value) order. Doubles as a delta-matroid
/// once [`SetSystem::check_symmetric_exchange`] certifies the axiom.
#[derive(Clone, PartialEq, Eq)]
pub struct SetSystem {
    ground: u32,
    family: Vec<Subset>,
}

impl fmt::Debug for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetSystem([{}], {:?})", self.ground, self.family)
    }
}

impl SetSystem {
    /// Builds a system from raw subsets; deduplicates and sorts canonically.
    pub fn new(ground: u32, subsets: Vec<Subset>) -> Result<SetSystem> {
        if ground > 64 {
            return Err(Error::GroundSetTooLarge(ground));
        }
        let mask = ground_mask(ground);
        let mut family = subsets;
        for s in &family {
            if s.bits() & !mask != 0 {
                let stray = (s.bits() & !mask).trailing_zeros() + 1;
                return Err(Error::OutOfRangeElement {
                    element: stray,
                    ground,
                });
            }
        }
        family.sort();
        family.dedup();
        Ok(SetSystem { ground, family })
    }

    /// Builds a system from 1-based element lists (the file-format view).
    pub fn from_element_lists(ground: u32, lists: &[Vec<u32>]) -> Result<SetSystem> {
        if ground > 64 {
            return Err(Error::GroundSetTooLarge(ground));
        }
        let subsets = lists
            .iter()
            .map(|l| Subset::from_elements(l, ground))
            .collect::<Result<Vec<_>>>()?;
        SetSystem::new(ground, subsets)
    }

    pub fn ground_size(&self) -> u32 {
        self.ground
    }

    pub fn ground_mask(&self) -> u64 {
        ground_mask(self.ground)
    }

    /// Family members in canonical order.
    pub fn family(&self) -> &[Subset] {
        &self.family
    }

    pub fn is_proper(&self) -> bool {
        !self.family.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.family.binary_search(&s).is_ok()
    }

    fn require_proper(&self) -> Result<()> {
        if self.is_proper() {
            Ok(())
        } else {
            Err(Error::ImproperSystem)
        }
    }

    fn require_in_ground(&self, a: Subset) -> Result<()> {
        if a.bits() & !self.ground_mask() != 0 {
            let stray = (a.bits() & !self.ground_mask()).trailing_zeros() + 1;
            return Err(Error::OutOfRangeElement {
                element: stray,
                ground: self.ground,
            });
        }
        Ok(())
    }

    /// The twist `D Δ A`: replaces every feasible set `X` by `X Δ A`.
    pub fn twist(&self, a: Subset) -> Result<SetSystem> {
        self.require_in_ground(a)?;
        let mut family: Vec<Subset> = self.family.iter().map(|x| x.sym_diff(a)).collect();
        family.sort();
        SetSystem {
            ground: self.ground,
            family,
        }
        .validated()
    }

    fn validated(self) -> Result<SetSystem> {
        // twisting a deduplicated family cannot create duplicates
        debug_assert!(self.family.windows(2).all(|w| w[0] < w[1]));
        Ok(self)
    }

    /// `r_min`, `r_max` and the width `ω(D) = r_max − r_min`.
    pub fn width_summary(&self) -> Result<WidthSummary> {
        self.require_proper()?;
        let r_min = self.family.iter().map(|s| s.len()).min().unwrap();
        let r_max = self.family.iter().map(|s| s.len()).max().unwrap();
        Ok(WidthSummary {
            r_min,
            r_max,
            width: r_max - r_min,
        })
    }

    pub fn width(&self) -> Result<u32> {
        Ok(self.width_summary()?.width)
    }

    /// Width of the twist `D Δ A` without materialising the twisted family.
    pub fn twist_width(&self, a: Subset) -> Result<u32> {
        self.require_proper()?;
        self.require_in_ground(a)?;
        let mut lo = u32::MAX;
        let mut hi = 0;
        for x in &self.family {
            let c = x.sym_diff(a).len();
            lo = lo.min(c);
            hi = hi.max(c);
        }
        Ok(hi - lo)
    }

    /// All feasible sets of minimum cardinality, in canonical order.
    pub fn min_family(&self) -> Result<Vec<Subset>> {
        self.require_proper()?;
        let r_min = self.family.iter().map(|s| s.len()).min().unwrap();
        Ok(self
            .family
            .iter()
            .copied()
            .filter(|s| s.len() == r_min)
            .collect())
    }

    /// All feasible sets of maximum cardinality, in canonical order.
    pub fn max_family(&self) -> Result<Vec<Subset>> {
        self.require_proper()?;
        let r_max = self.family.iter().map(|s| s.len()).max().unwrap();
        Ok(self
            .family
            .iter()
            .copied()
            .filter(|s| s.len() == r_max)
            .collect())
    }

    /// Full scan of the symmetric exchange axiom: for all feasible `X`, `Y`
    /// and every `u ∈ X Δ Y` there must be a `v ∈ X Δ Y` (possibly `v = u`)
    /// with `X Δ {u,v}` feasible. Returns the lexicographically first
    /// witness under canonical order when the axiom fails.
    pub fn check_symmetric_exchange(&self) -> Result<AxiomVerdict> {
        self.require_proper()?;
        for &x in &self.family {
            for &y in &self.family {
                let diff = x.sym_diff(y);
                for u in diff.iter() {
                    let ok = diff.iter().any(|v| {
                        let exchange = Subset::singleton(u).union(Subset::singleton(v));
                        self.contains(x.sym_diff(exchange))
                    });
                    if !ok {
                        return Ok(AxiomVerdict::Witness { x, y, u });
                    }
                }
            }
        }
        Ok(AxiomVerdict::Holds)
    }

    pub fn is_delta_matroid(&self) -> bool {
        matches!(self.check_symmetric_exchange(), Ok(AxiomVerdict::Holds))
    }

    fn require_delta_matroid(&self) -> Result<()> {
        match self.check_symmetric_exchange()? {
            AxiomVerdict::Holds => Ok(()),
            AxiomVerdict::Witness { x, y, u } => Err(Error::not_delta_matroid(x, y, u)),
        }
    }

    /// The maximum twist width `∂ω_M(D)` as the largest symmetric difference
    /// between two feasible sets. Valid for any proper set system.
    pub fn max_twist_width(&self) -> Result<u32> {
        self.require_proper()?;
        let mut best = 0;
        for (i, &f1) in self.family.iter().enumerate() {
            for &f2 in &self.family[i..] {
                best = best.max(f1.sym_diff(f2).len());
            }
        }
        Ok(best)
    }

    /// The family `F̂`: feasible sets whose twist attains `∂ω_M(D)`.
    /// Nonempty for every proper system.
    pub fn hat_family(&self) -> Result<Vec<Subset>> {
        let target = self.max_twist_width()?;
        let hat: Vec<Subset> = self
            .family
            .iter()
            .copied()
            .filter(|&f| self.twist_width(f).unwrap() == target)
            .collect();
        debug_assert!(!hat.is_empty());
        Ok(hat)
    }

    /// Canonically first member of `F̂`; in particular of minimum cardinality.
    pub fn min_hat_feasible(&self) -> Result<Subset> {
        Ok(self.hat_family()?[0])
    }

    /// For a delta-matroid and feasible `F0`, returns the canonically first
    /// `F1 ∈ F_min` with `F1 ⊆ F0` and `F2 ∈ F_max` with `F0 ⊆ F2`.
    pub fn sandwich(&self, f0: Subset) -> Result<(Subset, Subset)> {
        self.require_delta_matroid()?;
        if !self.contains(f0) {
            return Err(Error::NotFeasible(f0.elements()));
        }
        let f1 = self
            .min_family()?
            .into_iter()
            .find(|f| f.is_subset_of(f0));
        let f2 = self
            .max_family()?
            .into_iter()
            .find(|f| f0.is_subset_of(*f));
        match (f1, f2) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(Error::NoSandwich),
        }
    }

    /// Iterates every subset of the ground set (2^n masks). Intended for the
    /// small ground sets the brute-force modules work on.
    pub fn all_subsets(&self) -> impl Iterator<Item = Subset> {
        let n = self.ground;
        (0u64..(1u64 << n)).map(Subset::from_bits)
    }
}

pub(crate) fn ground_mask(ground: u32) -> u64 {
    if ground >= 64 {
        u64::MAX
    } else {
        (1u64 << ground) - 1
    }
}
