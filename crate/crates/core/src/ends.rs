//! The geometric Weyl action as a rewriting calculus on multisets of signed
//! oriented ends at a puncture.
//!
//! An end is oriented toward the puncture (`in`) or away from it (`out`) and
//! carries a sign. Reflections replace each end by one or two ends, after
//! which resolvable pairs (opposite orientation, opposite sign) cancel.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{Coweight, Weight};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum PrimitiveEnd {
    InPlus,
    InMinus,
    OutPlus,
    OutMinus,
}

pub const ALL_ENDS: [PrimitiveEnd; 4] = [
    PrimitiveEnd::InPlus,
    PrimitiveEnd::InMinus,
    PrimitiveEnd::OutPlus,
    PrimitiveEnd::OutMinus,
];

impl fmt::Display for PrimitiveEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PrimitiveEnd::InPlus => "i+",
            PrimitiveEnd::InMinus => "i-",
            PrimitiveEnd::OutPlus => "o+",
            PrimitiveEnd::OutMinus => "o-",
        };
        f.write_str(s)
    }
}

impl FromStr for PrimitiveEnd {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "i+" => Ok(PrimitiveEnd::InPlus),
            "i-" => Ok(PrimitiveEnd::InMinus),
            "o+" => Ok(PrimitiveEnd::OutPlus),
            "o-" => Ok(PrimitiveEnd::OutMinus),
            other => Err(Error::InvalidKind(other.to_string())),
        }
    }
}

/// Casimir contribution of a single end.
pub fn contribution(e: PrimitiveEnd) -> Coweight {
    match e {
        PrimitiveEnd::InPlus => Coweight::fundamental(2),
        PrimitiveEnd::InMinus => Coweight::fundamental(1).neg(),
        PrimitiveEnd::OutPlus => Coweight::fundamental(1),
        PrimitiveEnd::OutMinus => Coweight::fundamental(2).neg(),
    }
}

/// Orientation reversal, signs kept.
pub fn dynkin_end(e: PrimitiveEnd) -> PrimitiveEnd {
    match e {
        PrimitiveEnd::InPlus => PrimitiveEnd::OutPlus,
        PrimitiveEnd::InMinus => PrimitiveEnd::OutMinus,
        PrimitiveEnd::OutPlus => PrimitiveEnd::InPlus,
        PrimitiveEnd::OutMinus => PrimitiveEnd::InMinus,
    }
}

/// Multiset of ends with finite support.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct EndMultiset(BTreeMap<PrimitiveEnd, u64>);

impl EndMultiset {
    pub fn new() -> Self {
        EndMultiset::default()
    }

    pub fn singleton(e: PrimitiveEnd) -> Self {
        let mut m = EndMultiset::new();
        m.add(e, 1);
        m
    }

    pub fn from_counts(counts: &[(PrimitiveEnd, u64)]) -> Self {
        let mut m = EndMultiset::new();
        for &(e, n) in counts {
            m.add(e, n);
        }
        m
    }

    pub fn add(&mut self, e: PrimitiveEnd, n: u64) {
        if n > 0 {
            *self.0.entry(e).or_insert(0) += n;
        }
    }

    pub fn count(&self, e: PrimitiveEnd) -> u64 {
        self.0.get(&e).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn union(&self, other: &EndMultiset) -> EndMultiset {
        let mut out = self.clone();
        for (&e, &n) in &other.0 {
            out.add(e, n);
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (PrimitiveEnd, u64)> + '_ {
        self.0.iter().map(|(&e, &n)| (e, n))
    }

    /// Counted-list notation such as `2*i+ 1*o-`.
    pub fn notation(&self) -> String {
        if self.0.is_empty() {
            return "empty".into();
        }
        self.iter()
            .map(|(e, n)| format!("{n}*{e}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse_notation(s: &str) -> Result<EndMultiset> {
        let mut m = EndMultiset::new();
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "empty" {
            return Ok(m);
        }
        for item in trimmed.split_whitespace() {
            let (count, kind) = match item.split_once('*') {
                Some((c, k)) => {
                    let n: u64 = c
                        .parse()
                        .map_err(|_| Error::InvalidKind(item.to_string()))?;
                    (n, k)
                }
                None => (1, item),
            };
            m.add(kind.parse()?, count);
        }
        Ok(m)
    }
}

/// Total Casimir coweight of a multiset.
pub fn theta(m: &EndMultiset) -> Coweight {
    let mut acc = Coweight::zero();
    for (e, n) in m.iter() {
        acc = acc.add(&contribution(e).scale(&crate::rat::Rat::int(n as i64)));
    }
    acc
}

/// Replacement of a single end under the reflection `r_s`. The image's
/// Casimir value is the reflection of the input's.
pub fn weyl_rewrite(s: usize, e: PrimitiveEnd) -> EndMultiset {
    use PrimitiveEnd::*;
    let ends: &[PrimitiveEnd] = match (s, e) {
        (1, InPlus) => &[InPlus],
        (1, InMinus) => &[OutPlus, OutMinus],
        (1, OutPlus) => &[InPlus, InMinus],
        (1, OutMinus) => &[OutMinus],
        (2, InPlus) => &[OutPlus, OutMinus],
        (2, InMinus) => &[InMinus],
        (2, OutPlus) => &[OutPlus],
        (2, OutMinus) => &[InPlus, InMinus],
        _ => panic!("no generator r_{s}"),
    };
    let mut m = EndMultiset::new();
    for &x in ends {
        m.add(x, 1);
    }
    m
}

/// Cancel resolvable pairs {i+, o-} and {i-, o+} until neither coexists.
/// The result is independent of the removal order and has the same theta.
pub fn normalize(m: &EndMultiset) -> EndMultiset {
    use PrimitiveEnd::*;
    let mut out = EndMultiset::new();
    let pairs = [(InPlus, OutMinus), (InMinus, OutPlus)];
    for (a, b) in pairs {
        let k = m.count(a).min(m.count(b));
        out.add(a, m.count(a) - k);
        out.add(b, m.count(b) - k);
    }
    out
}

/// Reflection of a multiset: rewrite every end, then cancel.
pub fn weyl_act(s: usize, m: &EndMultiset) -> EndMultiset {
    let mut acc = EndMultiset::new();
    for (e, n) in m.iter() {
        let image = weyl_rewrite(s, e);
        for (x, k) in image.iter() {
            acc.add(x, k * n);
        }
    }
    normalize(&acc)
}

/// Orientation reversal of the whole multiset.
pub fn dynkin(m: &EndMultiset) -> EndMultiset {
    let mut out = EndMultiset::new();
    for (e, n) in m.iter() {
        out.add(dynkin_end(e), n);
    }
    out
}

/// The six end kinds of the sign/tag dictionary: the four primitives plus
/// the two loop-attached composites.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExtendedEnd {
    Primitive(PrimitiveEnd),
    /// Outgoing strand attached to a loop around the puncture.
    LoopOut,
    /// Incoming strand attached to a loop around the puncture.
    LoopIn,
}

/// Fraser-Pylyavskyy tag of an end kind. The associated weight vector
/// equals the end's Casimir contribution under the identification of
/// coweights with weights.
pub fn to_fp_tag(e: ExtendedEnd) -> Vec<usize> {
    use PrimitiveEnd::*;
    match e {
        ExtendedEnd::Primitive(OutPlus) => vec![1],
        ExtendedEnd::LoopOut => vec![2],
        ExtendedEnd::Primitive(OutMinus) => vec![3],
        ExtendedEnd::Primitive(InPlus) => vec![1, 2],
        ExtendedEnd::LoopIn => vec![1, 3],
        ExtendedEnd::Primitive(InMinus) => vec![2, 3],
    }
}

/// Two-primitive shadow of an extended end: an outgoing composite carries
/// the two incoming loop ends and vice versa.
pub fn shadow(e: ExtendedEnd) -> EndMultiset {
    match e {
        ExtendedEnd::Primitive(p) => EndMultiset::singleton(p),
        ExtendedEnd::LoopOut => EndMultiset::from_counts(&[
            (PrimitiveEnd::InPlus, 1),
            (PrimitiveEnd::InMinus, 1),
        ]),
        ExtendedEnd::LoopIn => EndMultiset::from_counts(&[
            (PrimitiveEnd::OutPlus, 1),
            (PrimitiveEnd::OutMinus, 1),
        ]),
    }
}

/// Casimir contribution of an extended end, as a weight.
pub fn extended_contribution(e: ExtendedEnd) -> Weight {
    theta(&shadow(e)).to_weight()
}

/// All multisets with each kind's multiplicity at most `per_kind_max`.
pub fn enumerate_multisets(per_kind_max: u64) -> Vec<EndMultiset> {
    let mut out = Vec::new();
    let k = per_kind_max + 1;
    for code in 0..k.pow(4) {
        let mut m = EndMultiset::new();
        let mut c = code;
        for &e in &ALL_ENDS {
            m.add(e, c % k);
            c /= k;
        }
        out.push(m);
    }
    out
}
