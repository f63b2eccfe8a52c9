//! The sl3 root datum: coweights, weights, Weyl reflections, Dynkin involution.
//!
//! Coweights are stored in the fundamental-coweight basis (w1, w2). The
//! Cartan matrix is [[2,-1],[-1,2]], so the simple coroots are
//! a1 = 2 w1 - w2 and a2 = -w1 + 2 w2. Weights live in Z^3/(1,1,1) and are
//! stored in the fundamental-weight basis via e1 = p1, e1 + e2 = p2.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Rational coweight in the basis of fundamental coweights.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Coweight {
    #[serde(rename = "w1")]
    pub c1: Rat,
    #[serde(rename = "w2")]
    pub c2: Rat,
}

impl Coweight {
    pub fn new(c1: Rat, c2: Rat) -> Self {
        Coweight { c1, c2 }
    }

    pub fn zero() -> Self {
        Coweight::new(Rat::zero(), Rat::zero())
    }

    pub fn fundamental(s: usize) -> Self {
        match s {
            1 => Coweight::new(Rat::int(1), Rat::zero()),
            2 => Coweight::new(Rat::zero(), Rat::int(1)),
            _ => panic!("fundamental coweight index must be 1 or 2"),
        }
    }

    /// Simple coroot `a_s` expressed in fundamental coweights.
    pub fn simple_coroot(s: usize) -> Self {
        match s {
            1 => Coweight::new(Rat::int(2), Rat::int(-1)),
            2 => Coweight::new(Rat::int(-1), Rat::int(2)),
            _ => panic!("simple coroot index must be 1 or 2"),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.c2.is_zero()
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight::new(&self.c1 + &other.c1, &self.c2 + &other.c2)
    }

    pub fn neg(&self) -> Coweight {
        Coweight::new(-&self.c1, -&self.c2)
    }

    pub fn scale(&self, t: &Rat) -> Coweight {
        Coweight::new(&self.c1 * t, &self.c2 * t)
    }

    /// Pairing with the simple root `alpha_s`; in the fundamental bases this
    /// just reads off the s-th coordinate.
    pub fn pair_alpha(&self, s: usize) -> Rat {
        match s {
            1 => self.c1.clone(),
            2 => self.c2.clone(),
            _ => panic!("simple root index must be 1 or 2"),
        }
    }

    /// Identify P-check with P by sending each fundamental coweight to the
    /// fundamental weight of the same index.
    pub fn to_weight(&self) -> Weight {
        Weight { w1: self.c1.clone(), w2: self.c2.clone() }
    }
}

/// Reflection `r_s` on coweights: r_s(w_t) = w_t - delta_{st} a_s.
pub fn reflect(s: usize, lambda: &Coweight) -> Coweight {
    let a = Coweight::simple_coroot(s);
    let coeff = lambda.pair_alpha(s);
    lambda.add(&a.scale(&coeff).neg())
}

/// Dynkin involution on coweights: swaps the two fundamental coordinates.
pub fn dynkin_star(lambda: &Coweight) -> Coweight {
    Coweight::new(lambda.c2.clone(), lambda.c1.clone())
}

pub fn is_dominant(lambda: &Coweight) -> bool {
    !lambda.c1.is_negative() && !lambda.c2.is_negative()
}

pub fn is_antidominant(lambda: &Coweight) -> bool {
    is_dominant(&lambda.neg())
}

/// Weight of sl3 in the fundamental-weight basis.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Weight {
    pub w1: Rat,
    pub w2: Rat,
}

impl Weight {
    pub fn zero() -> Self {
        Weight { w1: Rat::zero(), w2: Rat::zero() }
    }

    /// Class of `a e1 + b e2 + c e3` in Z^3/(1,1,1): w1 = a - b, w2 = b - c.
    pub fn from_z3(a: i64, b: i64, c: i64) -> Self {
        Weight { w1: Rat::int(a - b), w2: Rat::int(b - c) }
    }

    pub fn is_zero(&self) -> bool {
        self.w1.is_zero() && self.w2.is_zero()
    }
}

/// `iota_A = sum_{i in A} e_i` for a proper nonempty subset A of {1,2,3}.
pub fn fp_weight_vector(tag: &[usize]) -> Result<Weight> {
    let mut seen = [false; 3];
    for &i in tag {
        if !(1..=3).contains(&i) || seen[i - 1] {
            return Err(Error::InvalidTag(tag.to_vec()));
        }
        seen[i - 1] = true;
    }
    let count = seen.iter().filter(|&&b| b).count();
    if count == 0 || count == 3 {
        return Err(Error::InvalidTag(tag.to_vec()));
    }
    let (a, b, c) = (seen[0] as i64, seen[1] as i64, seen[2] as i64);
    Ok(Weight::from_z3(a, b, c))
}

/// A word in the generators r1, r2 of W(sl3).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn apply(&self, lambda: &Coweight) -> Coweight {
        // Letters act left to right: the first letter is applied first.
        let mut v = lambda.clone();
        for &s in &self.0 {
            v = reflect(s, &v);
        }
        v
    }

    /// Integer 2x2 matrix of the action on (c1, c2).
    pub fn matrix(&self) -> [[i64; 2]; 2] {
        let img = |col: &Coweight| -> [Rat; 2] { [col.c1.clone(), col.c2.clone()] };
        let e1 = img(&self.apply(&Coweight::fundamental(1)));
        let e2 = img(&self.apply(&Coweight::fundamental(2)));
        let as_i = |r: &Rat| -> i64 { r.to_string().parse().expect("integral entry") };
        [[as_i(&e1[0]), as_i(&e2[0])], [as_i(&e1[1]), as_i(&e2[1])]]
    }

    /// One of the six reduced words `[]`, `[1]`, `[2]`, `[1,2]`, `[2,1]`,
    /// `[1,2,1]` representing the same group element.
    pub fn normal_form(&self) -> WeylWord {
        let m = self.matrix();
        for cand in [
            vec![],
            vec![1],
            vec![2],
            vec![1, 2],
            vec![2, 1],
            vec![1, 2, 1],
        ] {
            let w = WeylWord(cand);
            if w.matrix() == m {
                return w;
            }
        }
        unreachable!("every word reduces to one of the six normal forms")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn grid() -> Vec<Coweight> {
        let mut v = Vec::new();
        for a in -1..=1 {
            for b in -1..=1 {
                v.push(Coweight::new(Rat::int(a), Rat::int(b)));
            }
        }
        v
    }

    #[test]
    fn reflections_on_fundamental_coweights() {
        // r1.w1 = -w1 + w2, r1.w2 = w2, r2.w1 = w1, r2.w2 = w1 - w2
        assert_eq!(
            reflect(1, &Coweight::fundamental(1)),
            Coweight::new(Rat::int(-1), Rat::int(1))
        );
        assert_eq!(reflect(1, &Coweight::fundamental(2)), Coweight::fundamental(2));
        assert_eq!(reflect(2, &Coweight::fundamental(1)), Coweight::fundamental(1));
        assert_eq!(
            reflect(2, &Coweight::fundamental(2)),
            Coweight::new(Rat::int(1), Rat::int(-1))
        );
    }

    #[test]
    fn reflections_are_involutive_and_braid() {
        for l in grid() {
            for s in [1, 2] {
                assert_eq!(reflect(s, &reflect(s, &l)), l);
            }
            let lhs = reflect(1, &reflect(2, &reflect(1, &l)));
            let rhs = reflect(2, &reflect(1, &reflect(2, &l)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn group_has_six_elements() {
        let mut seen = BTreeSet::new();
        let mut frontier = vec![WeylWord(vec![])];
        while let Some(w) = frontier.pop() {
            if seen.insert(w.matrix()) {
                for s in [1, 2] {
                    let mut next = w.0.clone();
                    next.push(s);
                    frontier.push(WeylWord(next));
                }
            }
        }
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn normal_forms_cover_the_group() {
        let w = WeylWord(vec![1, 1, 2, 1, 2, 2, 1]);
        let nf = w.normal_form();
        assert_eq!(w.matrix(), nf.matrix());
        assert!(nf.0.len() <= 3);
    }

    #[test]
    fn dynkin_star_conjugates_reflections() {
        assert_eq!(dynkin_star(&Coweight::fundamental(1)), Coweight::fundamental(2));
        assert_eq!(dynkin_star(&Coweight::zero()), Coweight::zero());
        for l in grid() {
            assert_eq!(dynkin_star(&reflect(1, &dynkin_star(&l))), reflect(2, &l));
            assert_eq!(dynkin_star(&reflect(2, &dynkin_star(&l))), reflect(1, &l));
        }
    }

    #[test]
    fn dominance() {
        let both = Coweight::new(Rat::int(1), Rat::int(1));
        assert!(is_dominant(&both));
        assert!(!is_antidominant(&both));
        assert!(is_dominant(&Coweight::zero()));
        assert!(is_antidominant(&Coweight::zero()));
        let mixed = Coweight::new(Rat::int(1), Rat::int(-1));
        assert!(!is_dominant(&mixed));
        assert!(!is_antidominant(&mixed));
    }

    #[test]
    fn fp_tags() {
        assert_eq!(fp_weight_vector(&[1]).unwrap(), Weight::from_z3(1, 0, 0));
        assert_eq!(
            fp_weight_vector(&[1, 2]).unwrap(),
            Weight { w1: Rat::zero(), w2: Rat::int(1) }
        );
        // iota_{2} = e2 = p2 - p1
        assert_eq!(
            fp_weight_vector(&[2]).unwrap(),
            Weight { w1: Rat::int(-1), w2: Rat::int(1) }
        );
        assert!(fp_weight_vector(&[]).is_err());
        assert!(fp_weight_vector(&[1, 2, 3]).is_err());
        assert!(fp_weight_vector(&[4]).is_err());
    }

    #[test]
    fn pairing_is_kronecker() {
        for s in [1, 2] {
            for t in [1, 2] {
                let expected = if s == t { Rat::int(1) } else { Rat::zero() };
                assert_eq!(Coweight::fundamental(t).pair_alpha(s), expected);
            }
        }
    }
}
