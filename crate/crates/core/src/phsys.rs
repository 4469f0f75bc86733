//! Generic finite-dimensional port-Hamiltonian system.
//!
//! The state lives in mass-scaled ("tilde") coordinates so that the discrete
//! Hamiltonian gradient equals the effort coefficients. The interconnection
//! is stored as one copy of each coupling block and expanded antisymmetrically
//! on application, which makes the assembled operator skew-symmetric exactly,
//! not up to a tolerance.

use std::sync::Arc;

use nalgebra::{Cholesky, DMatrix, DVector, Dyn};

use crate::error::{Error, Result};
use crate::scalar::{real, Real};

/// Immutable block map of the concatenated state vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockLayout {
    sizes: Vec<usize>,
    offsets: Vec<usize>,
    total: usize,
}

impl BlockLayout {
    pub fn new(sizes: Vec<usize>) -> Self {
        let mut offsets = Vec::with_capacity(sizes.len());
        let mut total = 0;
        for &s in &sizes {
            offsets.push(total);
            total += s;
        }
        Self {
            sizes,
            offsets,
            total,
        }
    }

    pub fn n_blocks(&self) -> usize {
        self.sizes.len()
    }

    pub fn size(&self, block: usize) -> usize {
        self.sizes[block]
    }

    pub fn offset(&self, block: usize) -> usize {
        self.offsets[block]
    }

    pub fn range(&self, block: usize) -> std::ops::Range<usize> {
        self.offsets[block]..self.offsets[block] + self.sizes[block]
    }

    pub fn total(&self) -> usize {
        self.total
    }
}

/// State in tilde coordinates, partitioned according to a [`BlockLayout`].
#[derive(Debug, Clone)]
pub struct PhStateVector<T: Real> {
    layout: Arc<BlockLayout>,
    data: DVector<T>,
}

impl<T: Real> PhStateVector<T> {
    pub fn zeros(layout: Arc<BlockLayout>) -> Self {
        let n = layout.total();
        Self {
            layout,
            data: DVector::zeros(n),
        }
    }

    pub fn from_vector(layout: Arc<BlockLayout>, data: DVector<T>) -> Result<Self> {
        if data.len() != layout.total() {
            return Err(Error::SizeMismatch {
                context: "state vector",
                expected: layout.total(),
                actual: data.len(),
            });
        }
        Ok(Self { layout, data })
    }

    pub fn layout(&self) -> &BlockLayout {
        &self.layout
    }

    pub fn as_vector(&self) -> &DVector<T> {
        &self.data
    }

    pub fn as_vector_mut(&mut self) -> &mut DVector<T> {
        &mut self.data
    }

    pub fn into_vector(self) -> DVector<T> {
        self.data
    }

    pub fn block(&self, i: usize) -> nalgebra::DVectorView<'_, T> {
        self.data.rows(self.layout.offset(i), self.layout.size(i))
    }

    pub fn set_block(&mut self, i: usize, values: &DVector<T>) {
        let r = self.layout.range(i);
        self.data.rows_mut(r.start, r.len()).copy_from(values);
    }
}

/// One interconnection block: contributes `+factor * matrix * e[col]` to the
/// `row` equation and `-factor * matrix^T * e[row]` to the `col` equation.
#[derive(Debug, Clone)]
pub struct Coupling<T: Real> {
    pub row_block: usize,
    pub col_block: usize,
    pub factor: T,
    pub matrix: DMatrix<T>,
}

/// One block of the symmetric energy Gram matrix; blocks with
/// `row_block != col_block` implicitly carry their transposed mirror.
#[derive(Debug, Clone)]
pub struct GramBlock<T: Real> {
    pub row_block: usize,
    pub col_block: usize,
    pub matrix: DMatrix<T>,
}

/// Resistive port `R = G_R S G_R^T` with `G_R` selecting one state block.
#[derive(Debug, Clone)]
pub struct ResistivePort<T: Real> {
    pub block: usize,
    pub s_matrix: DMatrix<T>,
}

/// Assembled finite-dimensional port-Hamiltonian system
/// `x' = (J - R) dH/dx + B u (+ load)`, `y = B^T dH/dx`.
#[derive(Debug, Clone)]
pub struct AssembledPhSystem<T: Real> {
    layout: Arc<BlockLayout>,
    mass: Vec<DMatrix<T>>,
    mass_chol: Vec<Cholesky<T, Dyn>>,
    couplings: Vec<Coupling<T>>,
    energy: Vec<GramBlock<T>>,
    input: Option<DMatrix<T>>,
    load: Option<DVector<T>>,
    resistive: Option<ResistivePort<T>>,
}

impl<T: Real> AssembledPhSystem<T> {
    pub fn new(
        mass: Vec<DMatrix<T>>,
        couplings: Vec<Coupling<T>>,
        energy: Vec<GramBlock<T>>,
    ) -> Result<Self> {
        let layout = Arc::new(BlockLayout::new(mass.iter().map(|m| m.nrows()).collect()));
        let mut mass_chol = Vec::with_capacity(mass.len());
        for (i, m) in mass.iter().enumerate() {
            if m.nrows() != m.ncols() {
                return Err(Error::InvalidParameter(format!(
                    "mass block {i} is not square"
                )));
            }
            let chol = Cholesky::new(m.clone()).ok_or(Error::Solver(format!(
                "mass block {i} is not positive definite"
            )))?;
            mass_chol.push(chol);
        }
        for c in &couplings {
            if c.row_block >= layout.n_blocks() || c.col_block >= layout.n_blocks() {
                return Err(Error::InvalidParameter("coupling block out of range".into()));
            }
            if c.matrix.nrows() != layout.size(c.row_block)
                || c.matrix.ncols() != layout.size(c.col_block)
            {
                return Err(Error::SizeMismatch {
                    context: "coupling block",
                    expected: layout.size(c.row_block),
                    actual: c.matrix.nrows(),
                });
            }
        }
        for g in &energy {
            if g.matrix.nrows() != layout.size(g.row_block)
                || g.matrix.ncols() != layout.size(g.col_block)
            {
                return Err(Error::SizeMismatch {
                    context: "energy block",
                    expected: layout.size(g.row_block),
                    actual: g.matrix.nrows(),
                });
            }
        }
        Ok(Self {
            layout,
            mass,
            mass_chol,
            couplings,
            energy,
            input: None,
            load: None,
            resistive: None,
        })
    }

    pub fn with_input(mut self, b: DMatrix<T>) -> Result<Self> {
        if b.nrows() != self.layout.total() {
            return Err(Error::SizeMismatch {
                context: "input map rows",
                expected: self.layout.total(),
                actual: b.nrows(),
            });
        }
        self.input = Some(b);
        Ok(self)
    }

    pub fn with_load(mut self, load: DVector<T>) -> Result<Self> {
        if load.len() != self.layout.total() {
            return Err(Error::SizeMismatch {
                context: "load column",
                expected: self.layout.total(),
                actual: load.len(),
            });
        }
        self.load = Some(load);
        Ok(self)
    }

    /// Attaches `R = G_R S G_R^T` with `G_R` the injection of `block`.
    pub fn with_resistive(mut self, block: usize, s_matrix: DMatrix<T>) -> Result<Self> {
        if s_matrix.nrows() != self.layout.size(block) {
            return Err(Error::SizeMismatch {
                context: "resistive port",
                expected: self.layout.size(block),
                actual: s_matrix.nrows(),
            });
        }
        self.resistive = Some(ResistivePort { block, s_matrix });
        self
            .resistive
            .as_ref()
            .map(|_| ())
            .ok_or(Error::Solver("unreachable".into()))?;
        Ok(self)
    }

    pub fn layout(&self) -> Arc<BlockLayout> {
        Arc::clone(&self.layout)
    }

    pub fn total_dofs(&self) -> usize {
        self.layout.total()
    }

    pub fn n_inputs(&self) -> usize {
        self.input.as_ref().map_or(0, |b| b.ncols())
    }

    pub fn mass_block(&self, i: usize) -> &DMatrix<T> {
        &self.mass[i]
    }

    pub fn couplings(&self) -> &[Coupling<T>] {
        &self.couplings
    }

    pub fn energy_blocks(&self) -> &[GramBlock<T>] {
        &self.energy
    }

    pub fn input_matrix(&self) -> Option<&DMatrix<T>> {
        self.input.as_ref()
    }

    pub fn load_vector(&self) -> Option<&DVector<T>> {
        self.load.as_ref()
    }

    pub fn resistive_port(&self) -> Option<&ResistivePort<T>> {
        self.resistive.as_ref()
    }

    pub fn state_zero(&self) -> PhStateVector<T> {
        PhStateVector::zeros(self.layout())
    }

    pub fn state_from_vector(&self, v: DVector<T>) -> Result<PhStateVector<T>> {
        PhStateVector::from_vector(self.layout(), v)
    }

    fn check_state(&self, x: &PhStateVector<T>) -> Result<()> {
        if x.data.len() != self.layout.total() {
            return Err(Error::SizeMismatch {
                context: "state",
                expected: self.layout.total(),
                actual: x.data.len(),
            });
        }
        Ok(())
    }

    /// Solves `M v = rhs` block by block with the cached factorizations.
    pub fn solve_mass(&self, rhs: &DVector<T>) -> DVector<T> {
        let mut out = rhs.clone();
        for (i, chol) in self.mass_chol.iter().enumerate() {
            let r = self.layout.range(i);
            let block = out.rows(r.start, r.len()).into_owned();
            out.rows_mut(r.start, r.len()).copy_from(&chol.solve(&block));
        }
        out
    }

    /// Applies the block mass matrix.
    pub fn apply_mass(&self, v: &DVector<T>) -> DVector<T> {
        let mut out = DVector::zeros(v.len());
        for (i, m) in self.mass.iter().enumerate() {
            let r = self.layout.range(i);
            let block = v.rows(r.start, r.len());
            out.rows_mut(r.start, r.len()).copy_from(&(m * block));
        }
        out
    }

    /// Applies the symmetric energy Gram matrix.
    pub fn apply_energy(&self, v: &DVector<T>) -> DVector<T> {
        let mut out = DVector::zeros(v.len());
        for g in &self.energy {
            let ri = self.layout.range(g.row_block);
            let rj = self.layout.range(g.col_block);
            let vj = v.rows(rj.start, rj.len());
            let prod = &g.matrix * vj;
            for (k, val) in prod.iter().enumerate() {
                out[ri.start + k] += *val;
            }
            if g.row_block != g.col_block {
                let vi = v.rows(ri.start, ri.len());
                let prod_t = g.matrix.tr_mul(&vi);
                for (k, val) in prod_t.iter().enumerate() {
                    out[rj.start + k] += *val;
                }
            }
        }
        out
    }

    /// Applies the skew interconnection to an effort vector.
    pub fn apply_interconnection(&self, e: &DVector<T>) -> DVector<T> {
        let mut out = DVector::zeros(e.len());
        for c in &self.couplings {
            let rr = self.layout.range(c.row_block);
            let rc = self.layout.range(c.col_block);
            let e_col = e.rows(rc.start, rc.len());
            let up = &c.matrix * e_col * c.factor;
            for (k, val) in up.iter().enumerate() {
                out[rr.start + k] += *val;
            }
            let e_row = e.rows(rr.start, rr.len());
            let down = c.matrix.tr_mul(&e_row) * c.factor;
            for (k, val) in down.iter().enumerate() {
                out[rc.start + k] -= *val;
            }
        }
        out
    }

    /// Effort coefficients `e = dH/dx = M^-1 K M^-1 x`.
    pub fn coenergy(&self, x: &PhStateVector<T>) -> Result<DVector<T>> {
        self.check_state(x)?;
        let alpha = self.solve_mass(&x.data);
        let k_alpha = self.apply_energy(&alpha);
        Ok(self.solve_mass(&k_alpha))
    }

    /// Discrete Hamiltonian `H(x) = 1/2 a^T K a` with `a = M^-1 x`.
    pub fn hamiltonian(&self, x: &PhStateVector<T>) -> Result<T> {
        self.check_state(x)?;
        let alpha = self.solve_mass(&x.data);
        let k_alpha = self.apply_energy(&alpha);
        Ok(alpha.dot(&k_alpha) * real::<T>(0.5))
    }

    /// Power drained by the resistive port for a given effort vector.
    pub fn dissipated_power(&self, e: &DVector<T>) -> T {
        match &self.resistive {
            None => T::zero(),
            Some(port) => {
                let r = self.layout.range(port.block);
                let eb = e.rows(r.start, r.len());
                let s_eb = &port.s_matrix * eb;
                eb.dot(&s_eb)
            }
        }
    }

    /// Evaluates `x' = (J - R) e + B u (+ load)` and `y = B^T e`.
    ///
    /// `u` must be given iff the system carries an input map.
    pub fn dynamics(
        &self,
        x: &PhStateVector<T>,
        u: Option<&DVector<T>>,
    ) -> Result<(PhStateVector<T>, DVector<T>)> {
        self.check_state(x)?;
        let e = self.coenergy(x)?;
        let mut xdot = self.apply_interconnection(&e);
        if let Some(port) = &self.resistive {
            let r = self.layout.range(port.block);
            let eb = e.rows(r.start, r.len());
            let s_eb = &port.s_matrix * eb;
            for (k, val) in s_eb.iter().enumerate() {
                xdot[r.start + k] -= *val;
            }
        }
        let mut y = DVector::zeros(self.n_inputs());
        if let Some(b) = &self.input {
            let u = u.ok_or(Error::SizeMismatch {
                context: "input signal",
                expected: b.ncols(),
                actual: 0,
            })?;
            if u.len() != b.ncols() {
                return Err(Error::SizeMismatch {
                    context: "input signal",
                    expected: b.ncols(),
                    actual: u.len(),
                });
            }
            xdot += b * u;
            y = b.tr_mul(&e);
        } else if u.is_some() {
            return Err(Error::SizeMismatch {
                context: "input signal",
                expected: 0,
                actual: u.map_or(0, |v| v.len()),
            });
        }
        if let Some(l) = &self.load {
            xdot += l;
        }
        Ok((PhStateVector::from_vector(self.layout(), xdot)?, y))
    }

    /// Materializes the skew interconnection; intended for inspection and
    /// tests at desk scale.
    pub fn interconnection_dense(&self) -> DMatrix<T> {
        let n = self.layout.total();
        let mut j = DMatrix::zeros(n, n);
        for c in &self.couplings {
            let (ro, co) = (self.layout.offset(c.row_block), self.layout.offset(c.col_block));
            for col in 0..c.matrix.ncols() {
                for row in 0..c.matrix.nrows() {
                    let v = c.factor * c.matrix[(row, col)];
                    j[(ro + row, co + col)] += v;
                    j[(co + col, ro + row)] -= v;
                }
            }
        }
        j
    }

    /// Materializes the energy Gram matrix.
    pub fn energy_dense(&self) -> DMatrix<T> {
        let n = self.layout.total();
        let mut k = DMatrix::zeros(n, n);
        for g in &self.energy {
            let (ro, co) = (self.layout.offset(g.row_block), self.layout.offset(g.col_block));
            for col in 0..g.matrix.ncols() {
                for row in 0..g.matrix.nrows() {
                    let v = g.matrix[(row, col)];
                    k[(ro + row, co + col)] += v;
                    if g.row_block != g.col_block {
                        k[(co + col, ro + row)] += v;
                    }
                }
            }
        }
        k
    }

    /// Materializes the block mass matrix.
    pub fn mass_dense(&self) -> DMatrix<T> {
        let n = self.layout.total();
        let mut m = DMatrix::zeros(n, n);
        for (i, mb) in self.mass.iter().enumerate() {
            let o = self.layout.offset(i);
            m.view_mut((o, o), (mb.nrows(), mb.ncols())).copy_from(mb);
        }
        m
    }

    /// Dense co-energy map `S = M^-1 K M^-1` (effort as a linear map of the
    /// state).
    pub fn coenergy_map_dense(&self) -> DMatrix<T> {
        let k = self.energy_dense();
        let z = self.solve_mass_matrix(&k);
        let zt = z.transpose();
        self.solve_mass_matrix(&zt)
    }

    /// Dense drift operator `A = (J - R) S` of the linear dynamics.
    pub fn drift_dense(&self) -> DMatrix<T> {
        let s = self.coenergy_map_dense();
        let mut a = self.interconnection_dense() * &s;
        if let Some(port) = &self.resistive {
            let r = self.layout.range(port.block);
            let s_rows = s.rows(r.start, r.len()).into_owned();
            let damp = &port.s_matrix * s_rows;
            let mut target = a.rows_mut(r.start, r.len());
            target -= damp;
        }
        a
    }

    fn solve_mass_matrix(&self, rhs: &DMatrix<T>) -> DMatrix<T> {
        let mut out = rhs.clone();
        for (i, chol) in self.mass_chol.iter().enumerate() {
            let r = self.layout.range(i);
            let block = out.rows(r.start, r.len()).into_owned();
            out.rows_mut(r.start, r.len()).copy_from(&chol.solve(&block));
        }
        out
    }

    /// Removes degrees of freedom (essential boundary conditions) by
    /// symmetric elimination. `removed` lists `(block, dof-in-block)` pairs.
    pub fn eliminate_dofs(&self, removed: &[(usize, usize)]) -> Result<Self> {
        let nb = self.layout.n_blocks();
        let mut keep: Vec<Vec<usize>> = (0..nb).map(|b| (0..self.layout.size(b)).collect()).collect();
        for &(b, i) in removed {
            if b >= nb || i >= self.layout.size(b) {
                return Err(Error::InvalidParameter(format!(
                    "eliminated dof ({b}, {i}) out of range"
                )));
            }
            keep[b].retain(|&k| k != i);
        }
        let keep_global: Vec<usize> = (0..nb)
            .flat_map(|b| {
                let off = self.layout.offset(b);
                keep[b].iter().map(move |&i| off + i).collect::<Vec<_>>()
            })
            .collect();

        let mass = (0..nb)
            .map(|b| self.mass[b].select_rows(&keep[b]).select_columns(&keep[b]))
            .collect();
        let couplings = self
            .couplings
            .iter()
            .map(|c| Coupling {
                row_block: c.row_block,
                col_block: c.col_block,
                factor: c.factor,
                matrix: c
                    .matrix
                    .select_rows(&keep[c.row_block])
                    .select_columns(&keep[c.col_block]),
            })
            .collect();
        let energy = self
            .energy
            .iter()
            .map(|g| GramBlock {
                row_block: g.row_block,
                col_block: g.col_block,
                matrix: g
                    .matrix
                    .select_rows(&keep[g.row_block])
                    .select_columns(&keep[g.col_block]),
            })
            .collect();

        let mut reduced = Self::new(mass, couplings, energy)?;
        if let Some(b) = &self.input {
            reduced = reduced.with_input(b.select_rows(&keep_global))?;
        }
        if let Some(l) = &self.load {
            reduced = reduced.with_load(DVector::from_iterator(
                keep_global.len(),
                keep_global.iter().map(|&i| l[i]),
            ))?;
        }
        if let Some(port) = &self.resistive {
            reduced = reduced.with_resistive(
                port.block,
                port.s_matrix
                    .select_rows(&keep[port.block])
                    .select_columns(&keep[port.block]),
            )?;
        }
        Ok(reduced)
    }

    /// Reduces the conservative dynamics to the symmetric pencil
    /// `A q = omega^2 B q` over block-0 coordinates.
    ///
    /// Requires every coupling to feed on block 0 and the energy Gram to be
    /// block-0 decoupled, which holds for the beam and plate assemblies.
    pub fn reduced_pencil(&self) -> Result<(DMatrix<T>, DMatrix<T>)> {
        for c in &self.couplings {
            if c.col_block != 0 || c.row_block == 0 {
                return Err(Error::UnsupportedStructure(
                    "couplings must connect block 0 to the remaining blocks".into(),
                ));
            }
        }
        let mut k00: Option<&DMatrix<T>> = None;
        for g in &self.energy {
            let touches0 = g.row_block == 0 || g.col_block == 0;
            if touches0 && g.row_block != g.col_block {
                return Err(Error::UnsupportedStructure(
                    "energy Gram couples block 0 to other blocks".into(),
                ));
            }
            if g.row_block == 0 && g.col_block == 0 {
                k00 = Some(&g.matrix);
            }
        }
        let k00 = k00.ok_or(Error::UnsupportedStructure(
            "missing kinetic energy block".into(),
        ))?;

        // W_i = M_i^-1 G_i for every coupling.
        let ws: Vec<DMatrix<T>> = self
            .couplings
            .iter()
            .map(|c| self.mass_chol[c.row_block].solve(&c.matrix))
            .collect();

        let n0 = self.layout.size(0);
        let mut a = DMatrix::zeros(n0, n0);
        for (ci, c_i) in self.couplings.iter().enumerate() {
            for (cj, c_j) in self.couplings.iter().enumerate() {
                for g in &self.energy {
                    let mat = if g.row_block == c_i.row_block && g.col_block == c_j.row_block {
                        &g.matrix * &ws[cj]
                    } else if g.col_block == c_i.row_block
                        && g.row_block == c_j.row_block
                        && g.row_block != g.col_block
                    {
                        g.matrix.tr_mul(&ws[cj])
                    } else {
                        continue;
                    };
                    a += ws[ci].tr_mul(&mat) * (c_i.factor * c_j.factor);
                }
            }
        }
        // Pencil mass: M_0 K_00^-1 M_0.
        let chol_k00 = Cholesky::new(k00.clone())
            .ok_or(Error::Solver("kinetic energy block not positive definite".into()))?;
        let y = chol_k00.solve(&self.mass[0]);
        let b = &self.mass[0] * y;
        let b = (&b + b.transpose()) * real::<T>(0.5);
        let a = (&a + a.transpose()) * real::<T>(0.5);
        Ok((a, b))
    }

    /// Angular eigenfrequencies and block-0 mode shapes of the undamped
    /// dynamics, ascending. The damping port, if any, is ignored.
    pub fn eigenmodes(&self) -> Result<Modes<T>> {
        let (a, b) = self.reduced_pencil()?;
        let (lambda, shapes) = generalized_symmetric_eigen(&a, &b)?;
        // A skew operator with respect to the energy inner product has purely
        // imaginary spectrum; the pencil must therefore be nonnegative.
        let lam_max = lambda.iter().fold(T::zero(), |m, &l| m.max(l.abs()));
        let tol = real::<T>(-1e-8) * lam_max.max(T::one());
        for &l in &lambda {
            if l < tol {
                return Err(Error::Solver(format!(
                    "negative pencil eigenvalue {l:?} violates spectral symmetry"
                )));
            }
        }
        let omega = lambda.iter().map(|&l| l.max(T::zero()).sqrt()).collect();
        Ok(Modes {
            omega,
            shapes,
        })
    }
}

/// Sorted modal data; shapes are columns over block-0 coefficients.
#[derive(Debug, Clone)]
pub struct Modes<T: Real> {
    pub omega: Vec<T>,
    pub shapes: DMatrix<T>,
}

impl<T: Real> Modes<T> {
    pub fn frequency_hz(&self, i: usize) -> T {
        self.omega[i] / (real::<T>(2.0) * T::pi())
    }
}

/// Solves the generalized symmetric eigenproblem `A x = lambda B x` with
/// symmetric `A` and SPD `B` through a Cholesky reduction.
pub fn generalized_symmetric_eigen<T: Real>(
    a: &DMatrix<T>,
    b: &DMatrix<T>,
) -> Result<(Vec<T>, DMatrix<T>)> {
    let chol = Cholesky::new(b.clone()).ok_or(Error::Solver(
        "pencil mass matrix is not positive definite".into(),
    ))?;
    let l = chol.l();
    // C = L^-1 A L^-T, kept symmetric.
    let la = l
        .solve_lower_triangular(a)
        .ok_or(Error::Solver("singular Cholesky factor".into()))?;
    let lat = la.transpose();
    let c = l
        .solve_lower_triangular(&lat)
        .ok_or(Error::Solver("singular Cholesky factor".into()))?;
    let c = (&c + c.transpose()) * real::<T>(0.5);
    let eig = c.symmetric_eigen();
    let n = eig.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        eig.eigenvalues[i]
            .partial_cmp(&eig.eigenvalues[j])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let lambda: Vec<T> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    // Back-transform the vectors: x = L^-T y.
    let lt = l.transpose();
    let mut shapes = DMatrix::zeros(n, n);
    for (col, &i) in order.iter().enumerate() {
        let y = eig.eigenvectors.column(i).into_owned();
        let x = lt
            .solve_upper_triangular(&y)
            .ok_or(Error::Solver("singular Cholesky factor".into()))?;
        shapes.set_column(col, &x);
    }
    Ok((lambda, shapes))
}
