//! Exchange seeds and tropical cluster mutations.
//!
//! The exchange matrix eps is skew-symmetric over (1/2)Z, integral outside
//! the frozen-frozen block. We store the doubled matrix `matrix2 = 2*eps`
//! in integers so that half-entries stay exact. Vertex ids are 1-based
//! throughout.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::Rat;

pub type VertexId = usize;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ExchangeSeed {
    pub size: usize,
    pub frozen: BTreeSet<VertexId>,
    /// Row-major doubled exchange matrix: `matrix2[i-1][j-1] = 2*eps_ij`.
    pub matrix2: Vec<Vec<i64>>,
}

impl ExchangeSeed {
    pub fn new(size: usize, frozen: BTreeSet<VertexId>, matrix2: Vec<Vec<i64>>) -> Result<Self> {
        let seed = ExchangeSeed { size, frozen, matrix2 };
        seed.check()?;
        Ok(seed)
    }

    fn check(&self) -> Result<()> {
        if self.matrix2.len() != self.size || self.matrix2.iter().any(|r| r.len() != self.size) {
            return Err(Error::BadFixture("matrix2 must be size x size".into()));
        }
        if let Some(&v) = self.frozen.iter().find(|&&v| v == 0 || v > self.size) {
            return Err(Error::IndexOutOfRange(v, self.size));
        }
        for i in 1..=self.size {
            for j in 1..=self.size {
                if self.eps2(i, j) != -self.eps2(j, i) {
                    return Err(Error::BadFixture(format!(
                        "matrix2 not skew-symmetric at ({i},{j})"
                    )));
                }
                let both_frozen = self.is_frozen(i) && self.is_frozen(j);
                if !both_frozen && self.eps2(i, j) % 2 != 0 {
                    return Err(Error::BadFixture(format!(
                        "eps_({i},{j}) must be integral outside the frozen-frozen block"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `2*eps_ij`.
    pub fn eps2(&self, i: VertexId, j: VertexId) -> i64 {
        self.matrix2[i - 1][j - 1]
    }

    /// `eps_ij` for entries known to be integral (any pair not both frozen).
    pub fn eps_int(&self, i: VertexId, j: VertexId) -> i64 {
        debug_assert!(self.eps2(i, j) % 2 == 0);
        self.eps2(i, j) / 2
    }

    pub fn is_frozen(&self, v: VertexId) -> bool {
        self.frozen.contains(&v)
    }

    pub fn unfrozen(&self) -> impl Iterator<Item = VertexId> + '_ {
        (1..=self.size).filter(|&v| !self.is_frozen(v))
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v == 0 || v > self.size {
            return Err(Error::IndexOutOfRange(v, self.size));
        }
        Ok(())
    }

    fn check_mutable(&self, k: VertexId) -> Result<()> {
        self.check_vertex(k)?;
        if self.is_frozen(k) {
            return Err(Error::FrozenMutation(k));
        }
        Ok(())
    }

    /// Matrix mutation at an unfrozen vertex `k`:
    /// `eps'_ij = -eps_ij` if `k` is `i` or `j`, else
    /// `eps'_ij = eps_ij + (eps_ik |eps_kj| + |eps_ik| eps_kj) / 2`.
    pub fn mutate(&self, k: VertexId) -> Result<ExchangeSeed> {
        self.check_mutable(k)?;
        let n = self.size;
        let mut m = vec![vec![0i64; n]; n];
        for i in 1..=n {
            for j in 1..=n {
                let old = self.eps2(i, j);
                m[i - 1][j - 1] = if i == k || j == k {
                    -old
                } else {
                    // matrix2 is doubled; eps_ik and eps_kj are integral since
                    // k is unfrozen, so the correction below is exact.
                    let a = self.eps2(i, k);
                    let b = self.eps2(k, j);
                    let corr = a
                        .checked_mul(b.abs()).zip(a.abs().checked_mul(b))
                        .and_then(|(x, y)| x.checked_add(y))
                        .ok_or(Error::Overflow)?
                        / 4;
                    old.checked_add(corr).ok_or(Error::Overflow)?
                };
            }
        }
        Ok(ExchangeSeed { size: n, frozen: self.frozen.clone(), matrix2: m })
    }

    /// Relabel vertices: vertex `i` becomes `sigma(i)`.
    pub fn permute(&self, sigma: &Permutation) -> Result<ExchangeSeed> {
        sigma.check_size(self.size)?;
        for &v in &self.frozen {
            if !self.frozen.contains(&sigma.apply(v)) {
                return Err(Error::BadPermutation(format!(
                    "permutation moves frozen vertex {v} to unfrozen {}",
                    sigma.apply(v)
                )));
            }
        }
        let n = self.size;
        let mut m = vec![vec![0i64; n]; n];
        for i in 1..=n {
            for j in 1..=n {
                m[sigma.apply(i) - 1][sigma.apply(j) - 1] = self.eps2(i, j);
            }
        }
        Ok(ExchangeSeed { size: n, frozen: self.frozen.clone(), matrix2: m })
    }

    /// The pairs `(i, j)` with `eps_ij = +1`, i.e. the plain arrows.
    pub fn unit_arrows(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for i in 1..=self.size {
            for j in 1..=self.size {
                if self.eps2(i, j) == 2 {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// A bijection of {1..N}, stored as the image vector.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(pub Vec<VertexId>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn transposition(n: usize, a: VertexId, b: VertexId) -> Self {
        let mut v: Vec<VertexId> = (1..=n).collect();
        v.swap(a - 1, b - 1);
        Permutation(v)
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: VertexId) -> VertexId {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img - 1] = i + 1;
        }
        Permutation(inv)
    }

    pub fn check_size(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::BadPermutation(format!(
                "length {} does not match seed size {n}",
                self.0.len()
            )));
        }
        let mut seen = vec![false; n];
        for &img in &self.0 {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::BadPermutation("not a bijection".into()));
            }
            seen[img - 1] = true;
        }
        Ok(())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &img)| img == i + 1)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Flavor {
    X,
    A,
}

/// Exact-rational tropical point, coordinates indexed 1..N.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TropicalPoint {
    pub flavor: Flavor,
    pub coords: Vec<Rat>,
}

impl TropicalPoint {
    pub fn zero(flavor: Flavor, n: usize) -> Self {
        TropicalPoint { flavor, coords: vec![Rat::zero(); n] }
    }

    pub fn from_coords(flavor: Flavor, coords: Vec<Rat>) -> Self {
        TropicalPoint { flavor, coords }
    }

    /// The delta point `e_i`.
    pub fn basis(flavor: Flavor, n: usize, i: VertexId) -> Self {
        let mut p = TropicalPoint::zero(flavor, n);
        p.coords[i - 1] = Rat::int(1);
        p
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn get(&self, i: VertexId) -> &Rat {
        &self.coords[i - 1]
    }

    pub fn set(&mut self, i: VertexId, v: Rat) {
        self.coords[i - 1] = v;
    }

    pub fn scale(&self, t: &Rat) -> TropicalPoint {
        TropicalPoint {
            flavor: self.flavor,
            coords: self.coords.iter().map(|c| c * t).collect(),
        }
    }

    pub fn check_flavor(&self, expected: Flavor) -> Result<()> {
        if self.flavor != expected {
            return Err(Error::FlavorMismatch { expected, got: self.flavor });
        }
        Ok(())
    }

    fn check_size(&self, seed: &ExchangeSeed) -> Result<()> {
        if self.len() != seed.size {
            return Err(Error::ChartMismatch(format!(
                "point has {} coordinates, seed has {}",
                self.len(),
                seed.size
            )));
        }
        Ok(())
    }

    pub fn permute(&self, sigma: &Permutation) -> Result<TropicalPoint> {
        sigma.check_size(self.len())?;
        let mut coords = vec![Rat::zero(); self.len()];
        for i in 1..=self.len() {
            coords[sigma.apply(i) - 1] = self.coords[i - 1].clone();
        }
        Ok(TropicalPoint { flavor: self.flavor, coords })
    }
}

/// Tropical X-mutation at `k`:
/// `x'_k = -x_k`, `x'_i = x_i - eps_ik [ -sgn(eps_ik) x_k ]_+` for `i != k`.
pub fn mutate_x_tropical(
    p: &TropicalPoint,
    seed: &ExchangeSeed,
    k: VertexId,
) -> Result<TropicalPoint> {
    p.check_flavor(Flavor::X)?;
    p.check_size(seed)?;
    seed.check_vertex(k)?;
    if seed.is_frozen(k) {
        return Err(Error::FrozenMutation(k));
    }
    let xk = p.get(k).clone();
    let mut coords = p.coords.clone();
    for i in 1..=seed.size {
        if i == k {
            coords[i - 1] = -&xk;
            continue;
        }
        let e = seed.eps_int(i, k);
        if e == 0 {
            continue;
        }
        let sgn = if e > 0 { 1 } else { -1 };
        let bend = xk.scale_int(-sgn).pos_part();
        coords[i - 1] = &coords[i - 1] - &bend.scale_int(e);
    }
    Ok(TropicalPoint { flavor: Flavor::X, coords })
}

/// Tropical A-mutation at `k`:
/// `a'_k = -a_k + max{ sum_j [eps_kj]_+ a_j, sum_j [-eps_kj]_+ a_j }`,
/// other coordinates unchanged.
pub fn mutate_a_tropical(
    p: &TropicalPoint,
    seed: &ExchangeSeed,
    k: VertexId,
) -> Result<TropicalPoint> {
    p.check_flavor(Flavor::A)?;
    p.check_size(seed)?;
    seed.check_vertex(k)?;
    if seed.is_frozen(k) {
        return Err(Error::FrozenMutation(k));
    }
    let mut plus = Rat::zero();
    let mut minus = Rat::zero();
    for j in 1..=seed.size {
        let e = seed.eps_int(k, j);
        if e > 0 {
            plus += &p.get(j).scale_int(e);
        } else if e < 0 {
            minus += &p.get(j).scale_int(-e);
        }
    }
    let mut coords = p.coords.clone();
    coords[k - 1] = -p.get(k) + &Rat::max(&plus, &minus);
    Ok(TropicalPoint { flavor: Flavor::A, coords })
}

/// Flavor-dispatching single mutation.
pub fn mutate_tropical(
    p: &TropicalPoint,
    seed: &ExchangeSeed,
    k: VertexId,
) -> Result<TropicalPoint> {
    match p.flavor {
        Flavor::X => mutate_x_tropical(p, seed, k),
        Flavor::A => mutate_a_tropical(p, seed, k),
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MutationStep {
    Mutate(VertexId),
    Permute(Vec<VertexId>),
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MutationPath(pub Vec<MutationStep>);

impl MutationPath {
    pub fn mutations(ks: &[VertexId]) -> Self {
        MutationPath(ks.iter().map(|&k| MutationStep::Mutate(k)).collect())
    }

    pub fn push(&mut self, step: MutationStep) {
        self.0.push(step);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Reversed step list with each permutation inverted; composing with the
    /// original path is the identity on points and seeds.
    pub fn invert(&self) -> MutationPath {
        MutationPath(
            self.0
                .iter()
                .rev()
                .map(|step| match step {
                    MutationStep::Mutate(k) => MutationStep::Mutate(*k),
                    MutationStep::Permute(v) => {
                        MutationStep::Permute(Permutation(v.clone()).inverse().0)
                    }
                })
                .collect(),
        )
    }

    /// Left-to-right concatenation.
    pub fn then(&self, other: &MutationPath) -> MutationPath {
        let mut steps = self.0.clone();
        steps.extend(other.0.iter().cloned());
        MutationPath(steps)
    }
}

/// Apply a path left to right to a point and seed.
pub fn apply_path(
    p: &TropicalPoint,
    seed: &ExchangeSeed,
    path: &MutationPath,
) -> Result<(TropicalPoint, ExchangeSeed)> {
    let mut point = p.clone();
    let mut seed = seed.clone();
    for step in &path.0 {
        match step {
            MutationStep::Mutate(k) => {
                point = mutate_tropical(&point, &seed, *k)?;
                seed = seed.mutate(*k)?;
            }
            MutationStep::Permute(v) => {
                let sigma = Permutation(v.clone());
                point = point.permute(&sigma)?;
                seed = seed.permute(&sigma)?;
            }
        }
    }
    Ok((point, seed))
}

/// Apply a path to the seed only.
pub fn apply_path_to_seed(seed: &ExchangeSeed, path: &MutationPath) -> Result<ExchangeSeed> {
    let mut seed = seed.clone();
    for step in &path.0 {
        match step {
            MutationStep::Mutate(k) => seed = seed.mutate(*k)?,
            MutationStep::Permute(v) => seed = seed.permute(&Permutation(v.clone()))?,
        }
    }
    Ok(seed)
}

/// `count` rational vectors with numerators in [-10,10] and denominators in
/// [1,5], deterministic for a given seed.
pub fn random_rational_vectors(dim: usize, count: usize, rng_seed: u64) -> Vec<Vec<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    (0..count)
        .map(|_| {
            (0..dim)
                .map(|_| Rat::new(rng.gen_range(-10..=10), rng.gen_range(1..=5)))
                .collect()
        })
        .collect()
}

/// All of {-1,0,1}^dim in ternary-counter order, followed by `extra_random`
/// seeded random rational vectors. The bending loci of every map in this
/// crate are coordinate hyperplanes, so the sign grid exercises every
/// linearity domain.
pub fn orthant_samples(dim: usize, extra_random: usize, rng_seed: u64) -> Vec<Vec<Rat>> {
    assert!(dim >= 1, "dimension must be positive");
    let total = 3usize.pow(dim as u32);
    let mut out = Vec::with_capacity(total + extra_random);
    for mut code in 0..total {
        let mut v = Vec::with_capacity(dim);
        for _ in 0..dim {
            v.push(Rat::int((code % 3) as i64 - 1));
            code /= 3;
        }
        out.push(v);
    }
    out.extend(random_rational_vectors(dim, extra_random, rng_seed));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn two_vertex_seed() -> ExchangeSeed {
        // eps_12 = 1 only
        ExchangeSeed::new(2, BTreeSet::new(), vec![vec![0, 2], vec![-2, 0]]).unwrap()
    }

    #[test]
    fn mutation_flips_sign_on_two_vertex_seed() {
        let s = two_vertex_seed();
        let m = s.mutate(1).unwrap();
        assert_eq!(m.eps2(1, 2), -2);
        assert_eq!(m.eps2(2, 1), 2);
    }

    #[test]
    fn mutation_is_involutive() {
        let s = two_vertex_seed();
        assert_eq!(s.mutate(1).unwrap().mutate(1).unwrap(), s);
    }

    #[test]
    fn frozen_vertex_cannot_mutate() {
        let s = ExchangeSeed::new(2, [2].into(), vec![vec![0, 2], vec![-2, 0]]).unwrap();
        assert_eq!(s.mutate(2), Err(Error::FrozenMutation(2)));
        assert_eq!(s.mutate(3), Err(Error::IndexOutOfRange(3, 2)));
    }

    #[test]
    fn x_mutation_fixes_origin_and_is_involutive() {
        let s = two_vertex_seed();
        let zero = TropicalPoint::zero(Flavor::X, 2);
        assert_eq!(mutate_x_tropical(&zero, &s, 1).unwrap(), zero);

        let p = TropicalPoint::from_coords(Flavor::X, vec![Rat::new(3, 2), Rat::int(-1)]);
        let q = mutate_x_tropical(&p, &s, 1).unwrap();
        let s1 = s.mutate(1).unwrap();
        assert_eq!(mutate_x_tropical(&q, &s1, 1).unwrap(), p);
    }

    #[test]
    fn a_mutation_fixes_origin_and_is_involutive() {
        let s = two_vertex_seed();
        let zero = TropicalPoint::zero(Flavor::A, 2);
        assert_eq!(mutate_a_tropical(&zero, &s, 1).unwrap(), zero);

        let p = TropicalPoint::from_coords(Flavor::A, vec![Rat::new(-2, 3), Rat::int(4)]);
        let q = mutate_a_tropical(&p, &s, 1).unwrap();
        let s1 = s.mutate(1).unwrap();
        assert_eq!(mutate_a_tropical(&q, &s1, 1).unwrap(), p);
    }

    #[test]
    fn flavor_mismatch_is_rejected() {
        let s = two_vertex_seed();
        let a = TropicalPoint::zero(Flavor::A, 2);
        assert!(matches!(
            mutate_x_tropical(&a, &s, 1),
            Err(Error::FlavorMismatch { .. })
        ));
    }

    #[test]
    fn empty_and_involutive_paths() {
        let s = two_vertex_seed();
        let p = TropicalPoint::from_coords(Flavor::X, vec![Rat::int(2), Rat::int(-5)]);
        let (q, t) = apply_path(&p, &s, &MutationPath::default()).unwrap();
        assert_eq!((q.clone(), t.clone()), (p.clone(), s.clone()));
        let (q, t) = apply_path(&p, &s, &MutationPath::mutations(&[1, 1])).unwrap();
        assert_eq!((q, t), (p, s));
    }

    #[test]
    fn invert_simple_paths() {
        assert_eq!(MutationPath::default().invert(), MutationPath::default());
        assert_eq!(
            MutationPath::mutations(&[3]).invert(),
            MutationPath::mutations(&[3])
        );
        let p = MutationPath(vec![
            MutationStep::Mutate(1),
            MutationStep::Permute(vec![2, 1]),
        ]);
        assert_eq!(
            p.invert(),
            MutationPath(vec![
                MutationStep::Permute(vec![2, 1]),
                MutationStep::Mutate(1),
            ])
        );
    }

    #[test]
    fn orthant_sample_counts() {
        assert_eq!(orthant_samples(1, 0, 0).len(), 3);
        assert_eq!(orthant_samples(2, 0, 0).len(), 9);
        assert_eq!(orthant_samples(6, 0, 0).len(), 729);
        let with_extra = orthant_samples(2, 5, 42);
        assert_eq!(with_extra.len(), 14);
        // deterministic for a fixed seed
        assert_eq!(with_extra, orthant_samples(2, 5, 42));
    }

    #[test]
    fn path_json_format() {
        let p = MutationPath(vec![
            MutationStep::Mutate(1),
            MutationStep::Permute(vec![2, 1, 3]),
        ]);
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"[{"mutate":1},{"permute":[2,1,3]}]"#);
        let back: MutationPath = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn seed_json_format() {
        let s = two_vertex_seed();
        let js = serde_json::to_value(&s).unwrap();
        assert_eq!(
            js,
            serde_json::json!({"size":2,"frozen":[],"matrix2":[[0,2],[-2,0]]})
        );
    }

    #[test]
    fn point_json_format() {
        let p = TropicalPoint::from_coords(Flavor::X, vec![Rat::int(1), Rat::new(1, 3)]);
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"{"flavor":"X","coords":["1","1/3"]}"#);
    }

    // Independent re-statement of the mutation rule on plain integral
    // matrices, kept deliberately naive to cross-check the production code.
    fn mutate_oracle(m2: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
        let n = m2.len();
        let eps: Vec<Vec<i64>> = m2.iter().map(|r| r.iter().map(|&x| x / 2).collect()).collect();
        let mut out = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let e = if i + 1 == k || j + 1 == k {
                    -eps[i][j]
                } else {
                    let (a, b) = (eps[i][k - 1], eps[k - 1][j]);
                    eps[i][j] + (a * b.abs() + a.abs() * b) / 2
                };
                out[i][j] = 2 * e;
            }
        }
        out
    }

    proptest! {
        #[test]
        fn mutation_matches_independent_oracle(
            entries in proptest::collection::vec(-3i64..=3, 10),
            k in 1usize..=5,
        ) {
            // random 5x5 skew-symmetric integral matrix
            let n = 5;
            let mut m2 = vec![vec![0i64; n]; n];
            let mut it = entries.into_iter();
            for i in 0..n {
                for j in (i + 1)..n {
                    let e = it.next().unwrap();
                    m2[i][j] = 2 * e;
                    m2[j][i] = -2 * e;
                }
            }
            let seed = ExchangeSeed::new(n, BTreeSet::new(), m2.clone()).unwrap();
            let got = seed.mutate(k).unwrap();
            let want = mutate_oracle(&m2, k);
            prop_assert_eq!(got.matrix2, want);
        }

        #[test]
        fn involution_and_skew_preserved(
            entries in proptest::collection::vec(-3i64..=3, 10),
            k in 1usize..=5,
        ) {
            let n = 5;
            let mut m2 = vec![vec![0i64; n]; n];
            let mut it = entries.into_iter();
            for i in 0..n {
                for j in (i + 1)..n {
                    let e = it.next().unwrap();
                    m2[i][j] = 2 * e;
                    m2[j][i] = -2 * e;
                }
            }
            let seed = ExchangeSeed::new(n, BTreeSet::new(), m2).unwrap();
            let once = seed.mutate(k).unwrap();
            // skew-symmetry is re-checked by the constructor
            prop_assert!(ExchangeSeed::new(n, BTreeSet::new(), once.matrix2.clone()).is_ok());
            prop_assert_eq!(once.mutate(k).unwrap(), seed);
        }

        #[test]
        fn x_mutation_positively_homogeneous(
            coords in proptest::collection::vec(-6i64..=6, 2),
            num in 1i64..=9,
            den in 1i64..=9,
        ) {
            let s = two_vertex_seed();
            let p = TropicalPoint::from_coords(
                Flavor::X,
                coords.iter().map(|&c| Rat::int(c)).collect(),
            );
            let lambda = Rat::new(num, den);
            let lhs = mutate_x_tropical(&p.scale(&lambda), &s, 1).unwrap();
            let rhs = mutate_x_tropical(&p, &s, 1).unwrap().scale(&lambda);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn a_mutation_positively_homogeneous(
            coords in proptest::collection::vec(-6i64..=6, 2),
            num in 1i64..=9,
            den in 1i64..=9,
        ) {
            let s = two_vertex_seed();
            let p = TropicalPoint::from_coords(
                Flavor::A,
                coords.iter().map(|&c| Rat::int(c)).collect(),
            );
            let lambda = Rat::new(num, den);
            let lhs = mutate_a_tropical(&p.scale(&lambda), &s, 1).unwrap();
            let rhs = mutate_a_tropical(&p, &s, 1).unwrap().scale(&lambda);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn random_paths_round_trip(
            ks in proptest::collection::vec(1usize..=2, 0..6),
            coords in proptest::collection::vec((-12i64..=12, 1i64..=4), 2),
        ) {
            let s = two_vertex_seed();
            let p = TropicalPoint::from_coords(
                Flavor::X,
                coords.iter().map(|&(n, d)| Rat::new(n, d)).collect(),
            );
            let path = MutationPath::mutations(&ks);
            let (q, t) = apply_path(&p, &s, &path).unwrap();
            let (back_p, back_s) = apply_path(&q, &t, &path.invert()).unwrap();
            prop_assert_eq!(back_p, p);
            prop_assert_eq!(back_s, s);
        }
    }

    #[test]
    fn permutation_equivariance() {
        // Permute(sigma) then Mutate(sigma(k)) equals Mutate(k) then Permute(sigma).
        let s = ExchangeSeed::new(
            3,
            BTreeSet::new(),
            vec![vec![0, 2, -2], vec![-2, 0, 2], vec![2, -2, 0]],
        )
        .unwrap();
        let sigma = Permutation(vec![2, 3, 1]);
        let p = TropicalPoint::from_coords(
            Flavor::X,
            vec![Rat::int(1), Rat::int(-2), Rat::new(1, 2)],
        );
        for k in 1..=3 {
            let lhs = apply_path(
                &p,
                &s,
                &MutationPath(vec![
                    MutationStep::Mutate(k),
                    MutationStep::Permute(sigma.0.clone()),
                ]),
            )
            .unwrap();
            let rhs = apply_path(
                &p,
                &s,
                &MutationPath(vec![
                    MutationStep::Permute(sigma.0.clone()),
                    MutationStep::Mutate(sigma.apply(k)),
                ]),
            )
            .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
