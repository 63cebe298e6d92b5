//! The signed permutation module `M(α|β)` with basis indexed by a left
//! transversal `Γ` of `S_{α|β}`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::combinatorics::Bicomposition;
use crate::exact_linalg::IntMatrix;
use crate::symgroup::{Permutation, Transversal};

/// Coordinates over `d ⊗ 1 ⊗ ε`, `d ∈ Γ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedVector {
    pub kind: Bicomposition,
    pub coords: Vec<BigInt>,
}

impl SignedVector {
    pub fn zero(kind: &Bicomposition, len: usize) -> Self {
        SignedVector {
            kind: kind.clone(),
            coords: vec![BigInt::zero(); len],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl Serialize for SignedVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("SignedVector", 3)?;
        s.serialize_field("type", &self.kind)?;
        s.serialize_field("basis", "gamma-distinguished")?;
        let coords: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        s.serialize_field("coords", &coords)?;
        s.end()
    }
}

/// A signed permutation matrix, stored by columns: basis vector `c` maps to
/// `sign[c] · e_{target[c]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedMonomial {
    pub target: Vec<usize>,
    pub sign: Vec<i8>,
}

impl SignedMonomial {
    pub fn identity(m: usize) -> Self {
        SignedMonomial {
            target: (0..m).collect(),
            sign: vec![1; m],
        }
    }

    pub fn dim(&self) -> usize {
        self.target.len()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedMonomial) -> SignedMonomial {
        let (target, sign) = other
            .target
            .iter()
            .zip(&other.sign)
            .map(|(&t, &s)| (self.target[t], self.sign[t] * s))
            .unzip();
        SignedMonomial { target, sign }
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); v.len()];
        for (c, x) in v.iter().enumerate() {
            out[self.target[c]] = if self.sign[c] < 0 { -x } else { x.clone() };
        }
        out
    }

    pub fn to_matrix(&self) -> IntMatrix {
        let m = self.dim();
        let mut out = IntMatrix::zeros(m, m);
        for c in 0..m {
            out.set(self.target[c], c, BigInt::from(self.sign[c]));
        }
        out
    }
}

/// `M(α|β)` against a chosen transversal.
#[derive(Debug, Clone)]
pub struct SignedModule {
    transversal: Transversal,
}

impl SignedModule {
    pub fn new(kind: &Bicomposition) -> Self {
        SignedModule {
            transversal: Transversal::distinguished(kind),
        }
    }

    pub fn with_transversal(transversal: Transversal) -> Self {
        SignedModule { transversal }
    }

    pub fn transversal(&self) -> &Transversal {
        &self.transversal
    }

    pub fn kind(&self) -> &Bicomposition {
        self.transversal.spec().kind()
    }

    pub fn dim(&self) -> usize {
        self.transversal.len()
    }

    /// `σ · (d ⊗ 1 ⊗ ε) = sgn(ξ_β) (d' ⊗ 1 ⊗ ε)` where `σ d = d' ξ_α ξ_β^{+|α|}`.
    pub fn act_basis(&self, sigma: &Permutation, d: usize) -> (i8, usize) {
        let x = sigma * &self.transversal.reps()[d];
        let (idx, dec) = self.transversal.decompose(&x);
        (dec.xi_beta.sign(), idx)
    }

    pub fn matrix_of(&self, sigma: &Permutation) -> SignedMonomial {
        let (sign, target) = (0..self.dim())
            .map(|d| {
                let (s, t) = self.act_basis(sigma, d);
                (s, t)
            })
            .unzip();
        SignedMonomial { target, sign }
    }

    /// One matrix per adjacent transposition `s_k = (k, k+1)`.
    pub fn generator_matrices(&self) -> Vec<SignedMonomial> {
        let n = self.transversal.spec().n();
        (0..n.saturating_sub(1))
            .map(|k| self.matrix_of(&Permutation::transposition(n, k, k + 1)))
            .collect()
    }

    pub fn act(&self, sigma: &Permutation, v: &SignedVector) -> SignedVector {
        SignedVector {
            kind: v.kind.clone(),
            coords: self.matrix_of(sigma).apply(&v.coords),
        }
    }
}

/// `act_basis(σ, d)` on the distinguished transversal; `d` must be one of its representatives.
pub fn act_basis(sigma: &Permutation, d: &Permutation, kind: &Bicomposition) -> (i8, Permutation) {
    let spec = crate::symgroup::YoungSubgroupSpec::new(kind);
    let dec = spec.coset_decompose(&(sigma * d));
    (dec.xi_beta.sign(), dec.rep)
}

pub fn action_matrices(kind: &Bicomposition) -> Vec<SignedMonomial> {
    SignedModule::new(kind).generator_matrices()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_bicompositions;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ab(s: &str) -> Bicomposition {
        s.parse().unwrap()
    }

    #[test]
    fn act_basis_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let m = SignedModule::new(&ab("4|"));
        for _ in 0..20 {
            let s = Permutation::random(4, &mut rng);
            for d in 0..m.dim() {
                assert_eq!(m.act_basis(&s, d).0, 1);
            }
        }
        let m = SignedModule::new(&ab("|4"));
        assert_eq!(m.dim(), 1);
        for _ in 0..20 {
            let s = Permutation::random(4, &mut rng);
            assert_eq!(m.act_basis(&s, 0), (s.sign(), 0));
        }
        let id = Permutation::identity(3);
        let s = Permutation::transposition(3, 1, 2);
        assert_eq!(act_basis(&s, &id, &ab("1|2")), (-1, id));
    }

    #[test]
    fn generators_are_involutions() {
        for n in 2..=5 {
            for kind in enumerate_bicompositions(n) {
                for g in action_matrices(&kind) {
                    assert_eq!(g.compose(&g), SignedMonomial::identity(g.dim()));
                    if kind.beta.is_empty() {
                        assert!(g.sign.iter().all(|&s| s == 1));
                    }
                }
            }
        }
    }

    #[test]
    fn longest_element_word() {
        let kind = ab("2,1|1,1");
        let n = 5;
        let m = SignedModule::new(&kind);
        let gens = m.generator_matrices();
        // w0 = (s1)(s2 s1)(s3 s2 s1)(s4 s3 s2 s1)
        let mut word = Vec::new();
        for top in 0..n - 1 {
            for k in (0..=top).rev() {
                word.push(k);
            }
        }
        let mut prod = SignedMonomial::identity(m.dim());
        let mut perm = Permutation::identity(n);
        for &k in &word {
            prod = prod.compose(&gens[k]);
            perm = &perm * &Permutation::transposition(n, k, k + 1);
        }
        assert_eq!(perm.images(), &[4, 3, 2, 1, 0]);
        assert_eq!(prod, m.matrix_of(&perm));
    }

    #[test]
    fn homomorphism_property() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let n = rng.gen_range(1..=7);
            let kinds = enumerate_bicompositions(n);
            let kind = kinds.choose(&mut rng).unwrap();
            let m = SignedModule::new(kind);
            let a = Permutation::random(n, &mut rng);
            let b = Permutation::random(n, &mut rng);
            assert_eq!(m.matrix_of(&a).compose(&m.matrix_of(&b)), m.matrix_of(&(&a * &b)));
        }
    }

    #[test]
    fn json_shape() {
        let v = SignedVector {
            kind: ab("1|2"),
            coords: vec![BigInt::from(3), BigInt::from(-1), BigInt::zero()],
        };
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"type":{"alpha":[1],"beta":[2]},"basis":"gamma-distinguished","coords":["3","-1","0"]}"#
        );
    }
}
