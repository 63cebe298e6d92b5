//! The homomorphisms `θ̂_𝔡 : S^λ → M(α|β)`: membership in ℛ and 𝒞, the
//! coefficients `a_{d,𝔡}`, the matrices of `θ̂_𝔡`, semistandard
//! representatives, the column pre-order and linear independence.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{
    enumerate_semistandard, factorial, Bicomposition, NumericTableau, Partition,
};
use crate::error::{Error, Result};
use crate::exact_linalg::{rank, FieldSpec, IntMatrix};
use crate::signed_module::{SignedModule, SignedMonomial};
use crate::specht::SpechtBasis;
use crate::symgroup::{column_stabilizer, row_stabilizer, Permutation, SetwiseProduct, TableauFrame, Transversal};

/// Everything fixed once `λ`, `(α|β)`, `t_0` and `Γ` are chosen.
pub struct HomContext {
    shape: Partition,
    frame: TableauFrame,
    transversal: Transversal,
    basis: SpechtBasis,
    rows: SetwiseProduct,
    cols: SetwiseProduct,
}

/// Matrix of `θ̂_𝔡`: row `s` holds `θ̂_𝔡(e_s)` over the `Γ` basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomMatrix {
    pub shape: Partition,
    pub kind: Bicomposition,
    pub rep: Permutation,
    pub entries: IntMatrix,
}

impl HomMatrix {
    pub fn rows(&self) -> usize {
        self.entries.rows()
    }

    pub fn cols(&self) -> usize {
        self.entries.cols()
    }

    pub fn is_zero_in(&self, field: FieldSpec) -> bool {
        self.entries.entries().iter().all(|v| field.kills(v))
    }

    /// Entries flattened row by row.
    pub fn flatten(&self) -> Vec<BigInt> {
        self.entries.entries().to_vec()
    }
}

impl Serialize for HomMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("HomMatrix", 6)?;
        s.serialize_field("shape", &self.shape)?;
        s.serialize_field("type", &self.kind)?;
        s.serialize_field("rep", &self.rep)?;
        s.serialize_field("rows", &self.rows())?;
        s.serialize_field("cols", &self.cols())?;
        s.serialize_field("entries", &self.entries.to_strings())?;
        s.end()
    }
}

/// The two directions of the column pre-order between `T_d` and `T_{d'}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PreorderRelation {
    /// `d ⊵ d'`.
    pub forward: bool,
    /// `d' ⊵ d`.
    pub backward: bool,
}

impl PreorderRelation {
    pub fn equivalent(self) -> bool {
        self.forward && self.backward
    }

    /// `d ▷ d'`.
    pub fn strictly_above(self) -> bool {
        self.forward && !self.backward
    }
}

impl HomContext {
    /// Uses the initial tableau `t^λ` and the distinguished transversal.
    pub fn new(shape: &Partition, kind: &Bicomposition) -> Result<Self> {
        Self::with_t0(shape, kind, NumericTableau::initial(shape))
    }

    pub fn with_t0(shape: &Partition, kind: &Bicomposition, t0: NumericTableau) -> Result<Self> {
        Self::with_parts(shape, kind, t0, Transversal::distinguished(kind))
    }

    pub fn with_parts(
        shape: &Partition,
        kind: &Bicomposition,
        t0: NumericTableau,
        transversal: Transversal,
    ) -> Result<Self> {
        if t0.shape() != shape {
            return Err(Error::InvalidTableau(format!("t0 {t0} does not have shape {shape}")));
        }
        if transversal.spec().kind() != kind {
            return Err(Error::InvalidPermutation("transversal of another type".into()));
        }
        let frame = TableauFrame::new(t0.clone(), kind)?;
        Ok(HomContext {
            shape: shape.clone(),
            rows: row_stabilizer(&t0),
            cols: column_stabilizer(&t0),
            frame,
            transversal,
            basis: SpechtBasis::new(shape),
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn kind(&self) -> &Bicomposition {
        self.frame.kind()
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn t0(&self) -> &NumericTableau {
        self.frame.t0()
    }

    pub fn frame(&self) -> &TableauFrame {
        &self.frame
    }

    pub fn transversal(&self) -> &Transversal {
        &self.transversal
    }

    pub fn gamma(&self) -> &[Permutation] {
        self.transversal.reps()
    }

    pub fn basis(&self) -> &SpechtBasis {
        &self.basis
    }

    pub fn row_group(&self) -> &SetwiseProduct {
        &self.rows
    }

    pub fn column_group(&self) -> &SetwiseProduct {
        &self.cols
    }

    pub fn signed_module(&self) -> SignedModule {
        SignedModule::with_transversal(self.transversal.clone())
    }

    /// `d ∈ ℛ`: repeated colours in a row of `T_d` are `c` colours.
    pub fn in_r(&self, d: &Permutation) -> bool {
        self.frame.row_condition(d)
    }

    /// `d ∈ 𝒞`: repeated colours in a column of `T_d` are `d` colours.
    pub fn in_c(&self, d: &Permutation) -> bool {
        self.frame.column_condition(d)
    }

    /// `d^{-1} R_{t_0} d ∩ S_{α|β} ⊆ S_α` by enumerating `R_{t_0}`.
    pub fn in_r_group(&self, d: &Permutation) -> bool {
        let spec = self.frame.spec();
        let alpha = spec.alpha_product();
        let dinv = d.inverse();
        self.rows.elements().all(|r| {
            let x = &(&dinv * &r) * d;
            !spec.contains(&x) || alpha.contains(&x)
        })
    }

    /// `d^{-1} C_{t_0} d ∩ S_{α|β} ⊆ S_β^{+|α|}` by enumerating `C_{t_0}`.
    pub fn in_c_group(&self, d: &Permutation) -> bool {
        let spec = self.frame.spec();
        let beta = spec.beta_product();
        let dinv = d.inverse();
        self.cols.elements().all(|c| {
            let x = &(&dinv * &c) * d;
            !spec.contains(&x) || beta.contains(&x)
        })
    }

    /// A representative given as an index into `Γ`, a 1-based image list
    /// (`[2,1,3]` or `2,1,3`) or a product of cycles.
    pub fn resolve_rep(&self, s: &str) -> Result<Permutation> {
        let t = s.trim();
        if !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit()) {
            let idx: usize = t
                .parse()
                .map_err(|_| crate::error::parse_error(s, 0, "index too large"))?;
            return self.gamma().get(idx).cloned().ok_or(Error::IndexOutOfRange {
                index: idx,
                len: self.gamma().len(),
            });
        }
        if t.contains(',') && !t.contains('(') && !t.starts_with('[') {
            return Permutation::parse(&format!("[{t}]"), self.n());
        }
        Permutation::parse(t, self.n())
    }

    fn require_r(&self, rep: &Permutation) -> Result<()> {
        if rep.n() != self.n() {
            return Err(Error::InvalidPermutation(format!("{rep} is not in S_{}", self.n())));
        }
        if !self.in_r(rep) {
            return Err(Error::NotInR(rep.to_string()));
        }
        Ok(())
    }

    /// `Ω_{d,𝔡} = { σ ∈ C_{t_0} : σ d ∈ R_{t_0} 𝔡 S_{α|β} }`.
    pub fn omega(&self, d: &Permutation, rep: &Permutation) -> Vec<Permutation> {
        self.cols
            .elements()
            .filter(|s| self.frame.in_row_double_coset(&(s * d), rep))
            .collect()
    }

    /// `a_{d,𝔡}` summed over all of `C_{t_0}`.
    pub fn a_coeff(&self, d: &Permutation, rep: &Permutation) -> Result<BigInt> {
        self.require_r(rep)?;
        let mut total = 0i64;
        for s in self.cols.elements() {
            let x = &s * d;
            if let Some(tau) = self.frame.row_matching(rep, &x) {
                total += i64::from(s.sign() * self.frame.epsilon_with(&x, rep, &tau));
            }
        }
        Ok(BigInt::from(total))
    }

    /// `|stab_{C_{t_0}}(T_d)| = |C_{t_0} ∩ d S_{α|β} d^{-1}|`: the product over
    /// columns of the factorials of colour multiplicities.
    pub fn stab_size(&self, d: &Permutation) -> u128 {
        let t = self.frame.block_tableau(d);
        let mut total: u128 = 1;
        let width = t.first().map_or(0, Vec::len);
        for j in 0..width {
            let mut col: Vec<usize> = t.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect();
            col.sort_unstable();
            let mut run = 1;
            for k in 1..=col.len() {
                if k < col.len() && col[k] == col[k - 1] {
                    run += 1;
                } else {
                    total *= factorial(run);
                    run = 1;
                }
            }
        }
        total
    }

    /// `a_{d,𝔡}` by walking the distinct column rearrangements of `T_d` that have
    /// the row contents of `T_𝔡`: each such coset contributes `sgn(σ_i) ε_𝔡(σ_i d)`
    /// and the total is scaled by `|stab_{C_{t_0}}(T_d)|`.
    pub fn a_coeff_orbit(&self, d: &Permutation, rep: &Permutation) -> Result<BigInt> {
        self.require_r(rep)?;
        if !self.in_c(d) {
            return Ok(BigInt::zero());
        }
        let from = self.frame.block_tableau(d);
        let target = self.frame.block_tableau(rep);
        let nblocks = self.kind().num_blocks();
        let width = from.first().map_or(0, Vec::len);
        let mut row_need = vec![vec![0usize; nblocks]; from.len()];
        for (i, r) in target.iter().enumerate() {
            for &b in r {
                row_need[i][b] += 1;
            }
        }
        let mut col_have = vec![vec![0usize; nblocks]; width];
        for r in &from {
            for (j, &b) in r.iter().enumerate() {
                col_have[j][b] += 1;
            }
        }
        let lens: Vec<usize> = from.iter().map(Vec::len).collect();
        let cells: Vec<(usize, usize)> = (0..width)
            .flat_map(|j| lens.iter().take_while(move |&&l| l > j).enumerate().map(move |(i, _)| (i, j)))
            .collect();
        let mut current = from.clone();
        let mut sum = 0i64;
        self.orbit_walk(
            &cells,
            0,
            &mut current,
            &mut row_need,
            &mut col_have,
            &mut |arranged: &[Vec<usize>]| {
                let sigma = self
                    .frame
                    .matching(&from, arranged, true)
                    .expect("arrangement has the column contents of T_d");
                let x = &sigma * d;
                let tau = self
                    .frame
                    .matching(&target, arranged, false)
                    .expect("arrangement has the row contents of T_𝔡");
                sum += i64::from(sigma.sign() * self.frame.epsilon_with(&x, rep, &tau));
            },
        );
        Ok(BigInt::from(sum) * BigInt::from(self.stab_size(d)))
    }

    #[allow(clippy::too_many_arguments)]
    fn orbit_walk(
        &self,
        cells: &[(usize, usize)],
        k: usize,
        current: &mut Vec<Vec<usize>>,
        row_need: &mut [Vec<usize>],
        col_have: &mut [Vec<usize>],
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if k == cells.len() {
            visit(current);
            return;
        }
        let (i, j) = cells[k];
        for b in 0..row_need[i].len() {
            if row_need[i][b] > 0 && col_have[j][b] > 0 {
                row_need[i][b] -= 1;
                col_have[j][b] -= 1;
                current[i][j] = b;
                self.orbit_walk(cells, k + 1, current, row_need, col_have, visit);
                row_need[i][b] += 1;
                col_have[j][b] += 1;
            }
        }
    }

    /// `ρ_t = t ∘ t_0^{-1}`.
    pub fn rho(&self, t: &NumericTableau) -> Permutation {
        let mut images = vec![0; self.n()];
        for (r0, r) in self.t0().rows().iter().zip(t.rows()) {
            for (&a, &b) in r0.iter().zip(r) {
                images[a] = b;
            }
        }
        Permutation::from_images(images).expect("tableaux are bijective")
    }

    /// `ϑ_𝔡(t)` over `Γ`, for any tableau `t`.
    pub fn theta_raw(&self, t: &NumericTableau, rep: &Permutation) -> Result<Vec<BigInt>> {
        self.require_r(rep)?;
        let rho_inv = self.rho(t).inverse();
        self.gamma()
            .par_iter()
            .map(|d| self.a_coeff_orbit(&(&rho_inv * d), rep))
            .collect()
    }

    /// Matrix of `θ̂_𝔡` with rows indexed by standard tableaux and columns by `Γ`.
    pub fn theta_matrix(&self, rep: &Permutation) -> Result<HomMatrix> {
        self.require_r(rep)?;
        let g = self.gamma().len();
        let rhos: Vec<Permutation> = self.basis.standard().iter().map(|s| self.rho(s).inverse()).collect();
        let flat: Vec<BigInt> = (0..rhos.len() * g)
            .into_par_iter()
            .map(|k| self.a_coeff_orbit(&(&rhos[k / g] * &self.gamma()[k % g]), rep))
            .collect::<Result<_>>()?;
        let mut entries = IntMatrix::zeros(rhos.len(), g);
        for (k, v) in flat.into_iter().enumerate() {
            entries.set(k / g, k % g, v);
        }
        Ok(HomMatrix {
            shape: self.shape.clone(),
            kind: self.kind().clone(),
            rep: rep.clone(),
            entries,
        })
    }

    /// `θ̂_𝔡` by brute-force coefficients; slow, for cross-checks.
    pub fn theta_matrix_brute(&self, rep: &Permutation) -> Result<HomMatrix> {
        self.require_r(rep)?;
        let g = self.gamma().len();
        let mut entries = IntMatrix::zeros(self.basis.dim(), g);
        for (i, s) in self.basis.standard().iter().enumerate() {
            let rho_inv = self.rho(s).inverse();
            for (j, d) in self.gamma().iter().enumerate() {
                entries.set(i, j, self.a_coeff(&(&rho_inv * d), rep)?);
            }
        }
        Ok(HomMatrix {
            shape: self.shape.clone(),
            kind: self.kind().clone(),
            rep: rep.clone(),
            entries,
        })
    }

    /// Indices into `Γ` of the representatives with semistandard `T_d`, ascending.
    pub fn gamma_sstd_indices(&self) -> Vec<usize> {
        let kind = self.kind();
        let t0 = self.t0();
        let mut out: Vec<usize> = enumerate_semistandard(&self.shape, kind)
            .expect("sizes agree")
            .iter()
            .map(|t| {
                let mut key = vec![0; self.n()];
                for (r0, r) in t0.rows().iter().zip(t.rows()) {
                    for (&label, &colour) in r0.iter().zip(r) {
                        key[label] = kind.block_of_color(colour).expect("colour of this type");
                    }
                }
                self.transversal.index_of_key(&key)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// `Γ_sstd`.
    pub fn gamma_sstd(&self) -> Vec<Permutation> {
        self.gamma_sstd_indices()
            .into_iter()
            .map(|i| self.gamma()[i].clone())
            .collect()
    }

    /// Compares sorted column contents of `T_d` and `T_{d'}` lexicographically,
    /// column by column.
    pub fn preorder(&self, d: &Permutation, d2: &Permutation) -> PreorderRelation {
        let a = self.frame.block_tableau(d);
        let b = self.frame.block_tableau(d2);
        let width = a.first().map_or(0, Vec::len);
        for j in 0..width {
            let mut y: Vec<usize> = a.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect();
            let mut z: Vec<usize> = b.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect();
            y.sort_unstable();
            z.sort_unstable();
            if let Some(k) = (0..y.len()).find(|&k| y[k] != z[k]) {
                let above = y[k] > z[k];
                return PreorderRelation {
                    forward: above,
                    backward: !above,
                };
            }
        }
        PreorderRelation {
            forward: true,
            backward: true,
        }
    }

    /// No semistandard tableau has `p` or more equal colours in a column.
    pub fn li_condition(&self, p: u64) -> bool {
        li_condition(&self.shape, self.kind(), p)
    }

    /// Every `θ̂_𝔡`, `𝔡 ∈ Γ_sstd`.
    pub fn theta_sstd(&self) -> Result<Vec<HomMatrix>> {
        self.gamma_sstd().iter().map(|d| self.theta_matrix(d)).collect()
    }

    /// `B_k H^T = H^T A_k` for every generator.
    pub fn is_equivariant(&self, theta: &HomMatrix, specht_gens: &[IntMatrix], signed_gens: &[SignedMonomial]) -> bool {
        let ht = theta.entries.transpose();
        specht_gens.iter().zip(signed_gens).all(|(a, b)| {
            let rhs = ht.mul(a);
            let lhs = b.to_matrix().mul(&ht);
            lhs == rhs
        })
    }
}

/// Each `θ̂` flattened into one row.
pub fn stacked(thetas: &[HomMatrix]) -> IntMatrix {
    IntMatrix::from_rows(thetas.iter().map(HomMatrix::flatten).collect())
}

pub fn stacked_rank(thetas: &[HomMatrix], field: FieldSpec) -> usize {
    if thetas.is_empty() {
        return 0;
    }
    rank(&stacked(thetas), field)
}

pub fn li_condition(shape: &Partition, kind: &Bicomposition, p: u64) -> bool {
    enumerate_semistandard(shape, kind)
        .map(|ts| ts.iter().all(|t| (t.max_column_repeat() as u64) < p))
        .unwrap_or(true)
}

/// `a_{𝔡,𝔡}` never vanishes over the field for `𝔡 ∈ Γ_sstd`.
pub fn diagonal_nonzero(ctx: &HomContext, field: FieldSpec) -> Result<bool> {
    for d in ctx.gamma_sstd() {
        if field.kills(&ctx.a_coeff_orbit(&d, &d)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The unique `θ̂_{id}` entry for `λ = (1^n)`, `(∅|(n))`, i.e. `n!`.
pub fn sign_instance_value(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}
