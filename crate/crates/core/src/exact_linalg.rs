//! Exact linear algebra over `Q` and `F_p`, and the Hom-space dimension oracle.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinatorics::{Bicomposition, Partition};
use crate::error::{parse_error, Error, Result};
use crate::signed_module::{SignedModule, SignedMonomial};
use crate::specht::SpechtBasis;

/// Largest `|Γ|` accepted by [`hom_dim_oracle`].
pub const HOM_DIM_GAMMA_BOUND: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// 0 for `Q`.
    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    /// `char F = 0` or `char F > n`.
    pub fn is_semisimple_for(self, n: usize) -> bool {
        match self {
            FieldSpec::Rationals => true,
            FieldSpec::Prime(p) => p as usize > n,
        }
    }

    /// `k ↦ k · 1_F` is zero.
    pub fn kills(self, k: &BigInt) -> bool {
        match self {
            FieldSpec::Rationals => k.is_zero(),
            FieldSpec::Prime(p) => (k % BigInt::from(p)).is_zero(),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("q"),
            FieldSpec::Prime(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let p: u64 = t
            .parse()
            .map_err(|_| parse_error(s, 0, "expected 'q' or a prime"))?;
        FieldSpec::prime(p)
    }
}

/// Dense matrix of arbitrary-precision integers, row major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }

    /// Entries reduced into `0..p`.
    pub fn reduce_mod(&self, p: u64) -> IntMatrix {
        let m = BigInt::from(p);
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.mod_floor(&m)).collect(),
        }
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        if self.rows == 0 {
            return other.clone();
        }
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect()
    }
}

/// Operations needed by elimination.
pub trait Field: Clone + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn lift(&self, a: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `a` must be nonzero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn lift(&self, a: &BigInt) -> BigRational {
        BigRational::from_integer(a.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

/// `F_p` for a prime `p < 2^31`, residues in `0..p`.
#[derive(Debug, Clone, Copy)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        FieldSpec::prime(p).map(|_| PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = r * a % self.p;
            }
            a = a * a % self.p;
            e >>= 1;
        }
        r
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn lift(&self, a: &BigInt) -> u64 {
        a.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits")
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        debug_assert!(*a != 0);
        self.pow(*a, self.p - 2)
    }
}

/// Dense matrix over a field with reduced entries.
#[derive(Debug, Clone)]
pub struct ExactMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn from_int(field: F, m: &IntMatrix) -> Self {
        let data = m.entries().iter().map(|v| field.lift(v)).collect();
        ExactMatrix {
            field,
            rows: m.rows(),
            cols: m.cols(),
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    /// Gaussian elimination.
    pub fn rank(&self) -> usize {
        let f = &self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| !f.is_zero(&a[i * cols + c])) else {
                continue;
            };
            if piv != r {
                for j in 0..cols {
                    a.swap(piv * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(&a[r * cols + c]);
            for j in c..cols {
                a[r * cols + j] = f.mul(&a[r * cols + j], &inv);
            }
            for i in r + 1..rows {
                let factor = a[i * cols + c].clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..cols {
                    let t = f.mul(&factor, &a[r * cols + j]);
                    a[i * cols + j] = f.sub(&a[i * cols + j], &t);
                }
            }
            r += 1;
        }
        r
    }
}

/// Fraction-free (Bareiss) elimination over `Z`; every division is exact.
pub fn rank_bareiss(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<BigInt> = m.entries().to_vec();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if piv != r {
            for j in 0..cols {
                a.swap(piv * cols + j, r * cols + j);
            }
        }
        let p = a[r * cols + c].clone();
        for i in r + 1..rows {
            let f = a[i * cols + c].clone();
            for j in c + 1..cols {
                let v = (&p * &a[i * cols + j] - &f * &a[r * cols + j]) / &prev;
                a[i * cols + j] = v;
            }
            a[i * cols + c] = BigInt::zero();
        }
        prev = p;
        r += 1;
    }
    r
}

pub fn rank_rational(m: &IntMatrix) -> usize {
    ExactMatrix::from_int(Rationals, m).rank()
}

pub fn rank_mod_p(m: &IntMatrix, p: u64) -> Result<usize> {
    Ok(ExactMatrix::from_int(PrimeField::new(p)?, m).rank())
}

/// Bareiss over `Q`, Gaussian elimination over `F_p`.
pub fn rank(m: &IntMatrix, field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => rank_bareiss(m),
        FieldSpec::Prime(p) => ExactMatrix::from_int(PrimeField { p }, m).rank(),
    }
}

/// Sparse row: `(variable, nonzero coefficient)` sorted by variable.
type SparseRow<E> = Vec<(usize, E)>;

/// Incremental row echelon form over sparse rows. Each inserted row is reduced
/// against the stored pivots; a row surviving with a new leading variable becomes
/// a pivot normalized to leading coefficient one.
pub struct SparseEchelon<F: Field> {
    field: F,
    num_vars: usize,
    pivots: Vec<Option<SparseRow<F::Elem>>>,
    rank: usize,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(field: F, num_vars: usize) -> Self {
        SparseEchelon {
            field,
            num_vars,
            pivots: vec![None; num_vars],
            rank: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nullity(&self) -> usize {
        self.num_vars - self.rank
    }

    /// `a - c * b` for sparse rows.
    fn axpy(&self, a: &SparseRow<F::Elem>, c: &F::Elem, b: &SparseRow<F::Elem>) -> SparseRow<F::Elem> {
        let f = &self.field;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_a {
                out.push(a[i].clone());
                i += 1;
            } else if take_b {
                out.push((b[j].0, f.neg(&f.mul(c, &b[j].1))));
                j += 1;
            } else {
                let v = f.sub(&a[i].1, &f.mul(c, &b[j].1));
                if !f.is_zero(&v) {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        out
    }

    /// Adds a row; returns whether it raised the rank.
    pub fn insert(&mut self, row: SparseRow<F::Elem>) -> bool {
        let mut row: SparseRow<F::Elem> = row.into_iter().filter(|(_, v)| !self.field.is_zero(v)).collect();
        row.sort_by_key(|(k, _)| *k);
        while let Some((lead, coeff)) = row.first().cloned() {
            match &self.pivots[lead] {
                Some(p) => {
                    row = self.axpy(&row, &coeff, p);
                }
                None => {
                    let inv = self.field.inv(&coeff);
                    let row = row
                        .into_iter()
                        .map(|(k, v)| (k, self.field.mul(&v, &inv)))
                        .collect();
                    self.pivots[lead] = Some(row);
                    self.rank += 1;
                    return true;
                }
            }
        }
        false
    }
}

/// `dim Hom(S^λ, M(α|β))` from the generator actions alone: the dimension of
/// `{ H : H A_k = B_k H }`, `H` of size `|Γ| × f^λ`.
pub fn hom_dim_with(
    specht_gens: &[IntMatrix],
    signed_gens: &[SignedMonomial],
    field: FieldSpec,
) -> usize {
    match field {
        FieldSpec::Rationals => hom_dim_generic(Rationals, specht_gens, signed_gens),
        FieldSpec::Prime(p) => hom_dim_generic(PrimeField { p }, specht_gens, signed_gens),
    }
}

fn hom_dim_generic<F: Field>(field: F, specht_gens: &[IntMatrix], signed_gens: &[SignedMonomial]) -> usize {
    let f = specht_gens.first().map_or(1, IntMatrix::rows);
    let g = signed_gens.first().map_or(1, SignedMonomial::dim);
    // variable H[c][s] has index c * f + s
    let mut ech = SparseEchelon::new(field.clone(), f * g);
    for (a, b) in specht_gens.iter().zip(signed_gens) {
        let a_elems: Vec<Vec<F::Elem>> = (0..f)
            .map(|s| (0..f).map(|t| field.lift(a.get(s, t))).collect())
            .collect();
        // (B H)[r_c][t] = sign_c H[c][t] must equal (H A)[r_c][t] = Σ_s H[r_c][s] A[s][t]
        for c in 0..g {
            let rc = b.target[c];
            let sign = if b.sign[c] < 0 { field.neg(&field.one()) } else { field.one() };
            for t in 0..f {
                let mut row: Vec<(usize, F::Elem)> = Vec::with_capacity(f + 1);
                for (s, a_row) in a_elems.iter().enumerate() {
                    if !field.is_zero(&a_row[t]) {
                        row.push((rc * f + s, a_row[t].clone()));
                    }
                }
                let var = c * f + t;
                match row.iter_mut().find(|(k, _)| *k == var) {
                    Some(entry) => entry.1 = field.sub(&entry.1, &sign),
                    None => row.push((var, field.neg(&sign))),
                }
                ech.insert(row);
            }
        }
    }
    ech.nullity()
}

/// `dim_F Hom_{F S_n}(S^λ_F, M_F(α|β))`, refusing `|Γ|` above [`HOM_DIM_GAMMA_BOUND`].
pub fn hom_dim_oracle(shape: &Partition, kind: &Bicomposition, field: FieldSpec) -> Result<usize> {
    hom_dim_oracle_bounded(shape, kind, field, HOM_DIM_GAMMA_BOUND)
}

pub fn hom_dim_oracle_bounded(
    shape: &Partition,
    kind: &Bicomposition,
    field: FieldSpec,
    bound: usize,
) -> Result<usize> {
    if shape.n() != kind.n() {
        return Err(Error::SizeMismatch {
            shape: shape.n(),
            kind: kind.n(),
        });
    }
    let gamma = crate::combinatorics::young_index(kind);
    if gamma > bound as u128 {
        return Err(Error::SizeBound {
            what: "|Γ|",
            value: gamma.min(usize::MAX as u128) as usize,
            bound,
        });
    }
    let basis = SpechtBasis::new(shape);
    let module = SignedModule::new(kind);
    Ok(hom_dim_with(&basis.generator_matrices(), &module.generator_matrices(), field))
}

/// Content-normalized copy: divide a nonzero integer vector by the gcd of its entries.
pub fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Absolute value of the first nonzero entry made positive, for sign normalization.
pub fn sign_normalized(v: &[BigInt]) -> Vec<BigInt> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => v.iter().map(|y| -y).collect(),
        _ => v.to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, rank_hint: usize) -> IntMatrix {
        // product of random rows × cols factors gives rank at most rank_hint
        let left = IntMatrix::from_rows(
            (0..rows)
                .map(|_| (0..rank_hint).map(|_| BigInt::from(rng.gen_range(-4..=4))).collect())
                .collect(),
        );
        let right = IntMatrix::from_rows(
            (0..rank_hint)
                .map(|_| (0..cols).map(|_| BigInt::from(rng.gen_range(-4..=4))).collect())
                .collect(),
        );
        left.mul(&right)
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert_eq!("9".parse::<FieldSpec>(), Err(Error::NotPrime(9)));
        assert_eq!("2147483659".parse::<FieldSpec>(), Err(Error::NotPrime(2147483659)));
        assert!(matches!("x".parse::<FieldSpec>(), Err(Error::Parse { .. })));
        assert!(is_prime(2147483647));
    }

    #[test]
    fn identity_rank() {
        for k in 0..6 {
            let id = IntMatrix::identity(k);
            assert_eq!(rank_bareiss(&id), k);
            assert_eq!(rank_rational(&id), k);
            assert_eq!(rank_mod_p(&id, 3).unwrap(), k);
        }
    }

    #[test]
    fn small_examples() {
        let m = IntMatrix::from_i64(&[vec![8, 12], vec![-8, 0]]);
        assert_eq!(rank(&m, FieldSpec::Rationals), 2);
        assert_eq!(rank(&m, FieldSpec::Prime(2)), 0);
        let m = IntMatrix::from_i64(&[vec![3, 6], vec![1, 2]]);
        assert_eq!(rank_bareiss(&m), 1);
        let m = IntMatrix::from_i64(&[vec![0, 0, 5], vec![0, 2, 1], vec![0, 4, 2]]);
        assert_eq!(rank_bareiss(&m), 2);
        assert_eq!(rank_mod_p(&m, 5).unwrap(), 1);
    }

    #[test]
    fn bareiss_matches_gauss() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..100 {
            let rows = rng.gen_range(1..8);
            let cols = rng.gen_range(1..8);
            let hint = rng.gen_range(1..=rows.min(cols));
            let m = random_matrix(&mut rng, rows, cols, hint);
            let r = rank_bareiss(&m);
            assert_eq!(r, rank_rational(&m));
            assert!(r <= hint);
        }
    }

    #[test]
    fn mod_p_rank_agrees_for_large_p() {
        let mut rng = ChaCha8Rng::seed_from_u64(100);
        for _ in 0..50 {
            let hint = rng.gen_range(1..=6);
            let m = random_matrix(&mut rng, 6, 7, hint);
            // rank can only drop mod p, and p = 2^31 - 1 exceeds every minor here
            let q = rank_bareiss(&m);
            assert_eq!(rank_mod_p(&m, 2147483647).unwrap(), q);
            for p in [2u64, 3, 5] {
                assert!(rank_mod_p(&m, p).unwrap() <= q);
            }
        }
    }

    #[test]
    fn sparse_echelon_matches_dense() {
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for _ in 0..50 {
            let hint = rng.gen_range(1..=6);
            let m = random_matrix(&mut rng, 7, 6, hint);
            for field in [FieldSpec::Rationals, FieldSpec::Prime(3)] {
                let r = match field {
                    FieldSpec::Rationals => {
                        let mut e = SparseEchelon::new(Rationals, 6);
                        for i in 0..7 {
                            e.insert(m.row(i).iter().enumerate().map(|(k, v)| (k, Rationals.lift(v))).collect());
                        }
                        e.rank()
                    }
                    FieldSpec::Prime(p) => {
                        let pf = PrimeField::new(p).unwrap();
                        let mut e = SparseEchelon::new(pf, 6);
                        for i in 0..7 {
                            e.insert(m.row(i).iter().enumerate().map(|(k, v)| (k, pf.lift(v))).collect());
                        }
                        e.rank()
                    }
                };
                assert_eq!(r, rank(&m, field));
            }
        }
    }

    #[test]
    fn hom_dim_small_cases() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        let ab = |s: &str| s.parse::<Bicomposition>().unwrap();
        // Hom(S^(n), M^(n)) and Hom(S^(1^n), sgn) are one dimensional
        assert_eq!(hom_dim_oracle(&p("3"), &ab("3|"), FieldSpec::Rationals).unwrap(), 1);
        assert_eq!(hom_dim_oracle(&p("1,1,1"), &ab("|3"), FieldSpec::Rationals).unwrap(), 1);
        assert_eq!(hom_dim_oracle(&p("3"), &ab("|3"), FieldSpec::Rationals).unwrap(), 0);
        // M^(2,1) = S^(3) + S^(2,1)
        assert_eq!(hom_dim_oracle(&p("2,1"), &ab("2,1|"), FieldSpec::Rationals).unwrap(), 1);
        assert_eq!(hom_dim_oracle(&p("1"), &ab("1|"), FieldSpec::Rationals).unwrap(), 1);
        assert!(matches!(
            hom_dim_oracle_bounded(&p("3"), &ab("1,1,1|"), FieldSpec::Rationals, 5),
            Err(Error::SizeBound { value: 6, .. })
        ));
        assert!(matches!(
            hom_dim_oracle(&p("3"), &ab("1|"), FieldSpec::Rationals),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn normalizations() {
        let v: Vec<BigInt> = [0, -4, 6].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(primitive_part(&v), vec![BigInt::zero(), BigInt::from(-2), BigInt::from(3)]);
        assert_eq!(sign_normalized(&v), vec![BigInt::zero(), BigInt::from(4), BigInt::from(-6)]);
    }
}
