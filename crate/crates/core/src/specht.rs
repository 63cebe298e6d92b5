//! The integral Specht module: tabloids, polytabloids, Garnir sums and
//! straightening onto the standard polytabloid basis.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::Serialize;

use crate::combinatorics::{enumerate_standard_tableaux, Cell, NumericTableau, Partition};
use crate::error::{Error, Result};
use crate::exact_linalg::IntMatrix;
use crate::symgroup::{column_stabilizer, Permutation, SetwiseProduct};

/// Row-equivalence class of a tableau; each row sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    rows: Vec<Vec<usize>>,
}

impl Tabloid {
    pub fn of(t: &NumericTableau) -> Self {
        let rows = t
            .rows()
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.sort_unstable();
                r
            })
            .collect();
        Tabloid { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }
}

/// A finite integer combination of tabloids, without zero terms.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TabloidVector {
    terms: BTreeMap<Tabloid, BigInt>,
}

impl TabloidVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, tabloid: Tabloid, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(tabloid);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &TabloidVector, c: &BigInt) {
        for (tab, v) in &other.terms {
            self.add_term(tab.clone(), &(v * c));
        }
    }

    pub fn terms(&self) -> &BTreeMap<Tabloid, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `e_t = Σ_{σ ∈ C_t} sgn(σ) {σ t}`.
pub fn polytabloid_expansion(t: &NumericTableau) -> TabloidVector {
    let mut v = TabloidVector::new();
    for sigma in column_stabilizer(t).elements() {
        v.add_term(Tabloid::of(&sigma.act_on(t)), &BigInt::from(sigma.sign()));
    }
    v
}

/// Cells `X` in one column and `Y` in a later column with `|X| + |Y|` exceeding
/// the length of the first column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GarnirSpec {
    x: Vec<Cell>,
    y: Vec<Cell>,
}

impl GarnirSpec {
    pub fn new(shape: &Partition, x: Vec<Cell>, y: Vec<Cell>) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidGarnir(m.to_string()));
        if x.is_empty() || y.is_empty() {
            return bad("X and Y must be nonempty");
        }
        let j = x[0].col;
        let j2 = y[0].col;
        if x.iter().any(|c| c.col != j) || y.iter().any(|c| c.col != j2) {
            return bad("X and Y must each lie in a single column");
        }
        if j >= j2 {
            return bad("the column of X must precede the column of Y");
        }
        if x.iter().chain(&y).any(|&c| !shape.contains(c)) {
            return bad("cell outside the diagram");
        }
        let mut all: Vec<Cell> = x.iter().chain(&y).copied().collect();
        all.sort();
        all.dedup();
        if all.len() != x.len() + y.len() {
            return bad("repeated cell");
        }
        if x.len() + y.len() <= shape.column_len(j) {
            return bad("|X| + |Y| must exceed the column length");
        }
        Ok(GarnirSpec { x, y })
    }

    /// The classical choice at a row violation in row `i` between columns `j` and `j+1`:
    /// `X` = cells `i..` of column `j`, `Y` = cells `..=i` of column `j+1`.
    pub fn at_violation(shape: &Partition, i: usize, j: usize) -> Result<Self> {
        let x = (i..shape.column_len(j)).map(|row| Cell { row, col: j }).collect();
        let y = (0..=i).map(|row| Cell { row, col: j + 1 }).collect();
        Self::new(shape, x, y)
    }

    /// A uniformly random valid spec.
    pub fn random<R: Rng + ?Sized>(shape: &Partition, rng: &mut R) -> Option<Self> {
        let width = shape.parts().first().copied().unwrap_or(0);
        if width < 2 {
            return None;
        }
        loop {
            let j = rng.gen_range(0..width - 1);
            let j2 = rng.gen_range(j + 1..width);
            let cx = shape.column_len(j);
            let cy = shape.column_len(j2);
            let pick = |len: usize, col: usize, rng: &mut R| -> Vec<Cell> {
                (0..len)
                    .filter(|_| rng.gen_bool(0.5))
                    .map(|row| Cell { row, col })
                    .collect()
            };
            let x = pick(cx, j, rng);
            let y = pick(cy, j2, rng);
            if let Ok(g) = Self::new(shape, x, y) {
                return Some(g);
            }
        }
    }

    pub fn x(&self) -> &[Cell] {
        &self.x
    }

    pub fn y(&self) -> &[Cell] {
        &self.y
    }

    /// Label-level minimal coset representatives `γ` of `S_{t(X)} S_{t(Y)}` in
    /// `S_{t(X ∪ Y)}`, one per choice of which labels land in `t(X)`.
    pub fn transversal(&self, t: &NumericTableau) -> Vec<Permutation> {
        let mut tx: Vec<usize> = self.x.iter().map(|&c| t.get(c)).collect();
        let mut ty: Vec<usize> = self.y.iter().map(|&c| t.get(c)).collect();
        tx.sort_unstable();
        ty.sort_unstable();
        let mut union: Vec<usize> = tx.iter().chain(&ty).copied().collect();
        union.sort_unstable();
        let k = tx.len();
        let m = union.len();
        let mut out = Vec::new();
        let mut chosen: Vec<usize> = (0..k).collect();
        loop {
            let mut in_a = vec![false; m];
            for &c in &chosen {
                in_a[c] = true;
            }
            let a: Vec<usize> = (0..m).filter(|&i| in_a[i]).map(|i| union[i]).collect();
            let b: Vec<usize> = (0..m).filter(|&i| !in_a[i]).map(|i| union[i]).collect();
            let mut images: Vec<usize> = (0..t.n()).collect();
            for (&from, &to) in tx.iter().zip(&a).chain(ty.iter().zip(&b)) {
                images[from] = to;
            }
            out.push(Permutation::from_images_unchecked(images));
            // next k-subset of 0..m
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if chosen[i] < m - k + i {
                    chosen[i] += 1;
                    for l in i + 1..k {
                        chosen[l] = chosen[l - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    /// Another transversal: each minimal representative times a random element of
    /// `S_{t(X)} S_{t(Y)}`.
    pub fn random_transversal<R: Rng + ?Sized>(&self, t: &NumericTableau, rng: &mut R) -> Vec<Permutation> {
        let sub = SetwiseProduct::new(
            t.n(),
            vec![
                self.x.iter().map(|&c| t.get(c)).collect(),
                self.y.iter().map(|&c| t.get(c)).collect(),
            ],
        );
        self.transversal(t)
            .into_iter()
            .map(|g| &g * &sub.random(rng))
            .collect()
    }
}

/// `G_Δ^t · t` as the list `(sgn γ, γ t)` over the minimal-representative transversal.
pub fn garnir_sum(t: &NumericTableau, g: &GarnirSpec) -> Result<Vec<(i8, NumericTableau)>> {
    let g = GarnirSpec::new(t.shape(), g.x.clone(), g.y.clone())?;
    Ok(g
        .transversal(t)
        .into_iter()
        .map(|gamma| (gamma.sign(), gamma.act_on(t)))
        .collect())
}

/// Sorts each column ascending; returns the sorted tableau and the sign of the sort.
#[allow(clippy::needless_range_loop)]
pub fn column_sort(t: &NumericTableau) -> (NumericTableau, i8) {
    let mut rows = t.rows().to_vec();
    let mut sign = 1i8;
    let width = rows.first().map_or(0, Vec::len);
    for j in 0..width {
        let h = t.shape().column_len(j);
        // insertion sort, counting swaps
        for a in 1..h {
            let mut b = a;
            while b > 0 && rows[b - 1][j] > rows[b][j] {
                let tmp = rows[b - 1][j];
                rows[b - 1][j] = rows[b][j];
                rows[b][j] = tmp;
                sign = -sign;
                b -= 1;
            }
        }
    }
    (NumericTableau::from_rows_unchecked(t.shape().clone(), rows), sign)
}

/// Coordinates over the standard polytabloids, in the order of
/// [`enumerate_standard_tableaux`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpechtVector {
    pub shape: Partition,
    pub coords: Vec<BigInt>,
}

impl SpechtVector {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl Serialize for SpechtVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("SpechtVector", 3)?;
        s.serialize_field("shape", &self.shape)?;
        s.serialize_field("basis", "std-lex")?;
        let coords: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        s.serialize_field("coords", &coords)?;
        s.end()
    }
}

/// The standard basis of `S^λ` with a shared straightening memo.
pub struct SpechtBasis {
    shape: Partition,
    standard: Vec<NumericTableau>,
    index: HashMap<Vec<Vec<usize>>, usize>,
    // column-sorted non-standard tableau -> coordinates
    memo: RwLock<HashMap<Vec<Vec<usize>>, Vec<BigInt>>>,
}

impl SpechtBasis {
    pub fn new(shape: &Partition) -> Self {
        let standard = enumerate_standard_tableaux(shape);
        let index = standard
            .iter()
            .enumerate()
            .map(|(i, t)| (t.rows().to_vec(), i))
            .collect();
        SpechtBasis {
            shape: shape.clone(),
            standard,
            index,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn standard(&self) -> &[NumericTableau] {
        &self.standard
    }

    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    pub fn index_of(&self, t: &NumericTableau) -> Option<usize> {
        self.index.get(t.rows()).copied()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    /// Coordinates of `e_t` over the standard polytabloids.
    pub fn straighten(&self, t: &NumericTableau) -> SpechtVector {
        assert_eq!(t.shape(), &self.shape, "tableau of the wrong shape");
        let (sorted, sign) = column_sort(t);
        let mut coords = self.straighten_sorted(&sorted);
        if sign < 0 {
            for c in coords.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        SpechtVector {
            shape: self.shape.clone(),
            coords,
        }
    }

    fn straighten_sorted(&self, t: &NumericTableau) -> Vec<BigInt> {
        if let Some(&i) = self.index.get(t.rows()) {
            let mut v = vec![BigInt::zero(); self.dim()];
            v[i] = BigInt::one();
            return v;
        }
        if let Some(v) = self.memo.read().unwrap().get(t.rows()) {
            return v.clone();
        }
        let (i, j) = first_row_violation(t).expect("column-sorted non-standard tableau has a row descent");
        let garnir = GarnirSpec::at_violation(&self.shape, i, j).expect("classical Garnir choice is valid");
        // Σ_γ sgn(γ) e_{γt} = 0 and the identity term is e_t itself. Every other
        // γt, once column-sorted, is strictly larger in the column-word dominance
        // order, so the recursion terminates at standard tableaux.
        let mut acc = vec![BigInt::zero(); self.dim()];
        for gamma in garnir.transversal(t) {
            if gamma.is_identity() {
                continue;
            }
            let (sorted, sign) = column_sort(&gamma.act_on(t));
            let sub = self.straighten_sorted(&sorted);
            // subtract sgn(γ) * sign * sub
            let negate = gamma.sign() * sign > 0;
            for (a, b) in acc.iter_mut().zip(&sub) {
                if negate {
                    *a -= b;
                } else {
                    *a += b;
                }
            }
        }
        self.memo
            .write()
            .unwrap()
            .insert(t.rows().to_vec(), acc.clone());
        acc
    }

    /// Matrix of `x` acting on the standard basis: column `t` holds the coordinates of `x · e_t`.
    pub fn action_matrix(&self, x: &Permutation) -> IntMatrix {
        let f = self.dim();
        let mut m = IntMatrix::zeros(f, f);
        for (c, t) in self.standard.iter().enumerate() {
            let v = self.straighten(&x.act_on(t));
            for (r, val) in v.coords.into_iter().enumerate() {
                m.set(r, c, val);
            }
        }
        m
    }

    /// One matrix per adjacent transposition `s_k = (k, k+1)`, `k = 1..n-1`.
    pub fn generator_matrices(&self) -> Vec<IntMatrix> {
        let n = self.shape.n();
        (0..n.saturating_sub(1))
            .map(|k| self.action_matrix(&Permutation::transposition(n, k, k + 1)))
            .collect()
    }

    /// `Σ_s coords[s] e_s` expanded into tabloids.
    pub fn expand(&self, v: &SpechtVector) -> TabloidVector {
        let mut out = TabloidVector::new();
        for (s, c) in self.standard.iter().zip(&v.coords) {
            if !c.is_zero() {
                out.add_scaled(&polytabloid_expansion(s), c);
            }
        }
        out
    }
}

/// Leftmost column `j`, then topmost row `i`, with `t(i,j) > t(i,j+1)`.
fn first_row_violation(t: &NumericTableau) -> Option<(usize, usize)> {
    let width = t.rows().first().map_or(0, Vec::len);
    for j in 0..width.saturating_sub(1) {
        for (i, row) in t.rows().iter().enumerate() {
            if row.len() > j + 1 && row[j] > row[j + 1] {
                return Some((i, j));
            }
        }
    }
    None
}

/// `straighten(t)` with a throwaway memo.
pub fn straighten(t: &NumericTableau) -> SpechtVector {
    SpechtBasis::new(t.shape()).straighten(t)
}

pub fn specht_generator_matrices(shape: &Partition) -> Vec<IntMatrix> {
    SpechtBasis::new(shape).generator_matrices()
}

/// Largest absolute coordinate, handy for reporting coefficient growth.
pub fn max_abs(v: &SpechtVector) -> BigInt {
    v.coords.iter().map(|c| c.abs()).max().unwrap_or_default()
}
