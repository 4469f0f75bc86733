//! Physical parameters, pointwise energy and co-energy relations shared by
//! the beam and plate models.
//!
//! Curvature ordering is fixed to `(k_xx, k_yy, k_xy)` with the mixed entry
//! carrying the factor-2 convention (`k_xy = 2 w_xy`), matching the vectorial
//! constitutive matrix with its `(1 - nu)/2` shear entry. The tensorial
//! verification routines use the un-doubled convention and are kept separate.

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};
use crate::scalar::{real, Real};

/// Homogeneous support applied to a boundary side or beam end.
///
/// Essential conditions are realized by symmetric elimination of the
/// kinematic degrees of freedom; `Free` leaves the natural boundary inputs
/// at zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportCondition {
    Free,
    Clamped,
    SimplySupported,
}

/// Material and section constants.
///
/// Plate quantities (`surface_density`, `thickness`, `poisson`) and beam
/// quantities (`line_density`, `second_moment`) share one container; the
/// constructors fill the fields of the other model consistently, so the
/// bending rigidity formula applies to both. Properties are constant per
/// model instance; spatially varying coefficients are out of scope.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaterialParams<T> {
    /// Surface density `mu` (mass per unit area).
    pub surface_density: T,
    /// Young modulus `E`.
    pub young_modulus: T,
    /// Poisson ratio `nu`.
    pub poisson: T,
    /// Thickness `h`.
    pub thickness: T,
    /// Fluid damping coefficient `r >= 0` (mass per area per time).
    pub damping: T,
    /// Line density `rho` (mass per unit length, beam).
    pub line_density: T,
    /// Second moment of area `I` of the cross section (beam).
    pub second_moment: T,
}

impl<T: Real> MaterialParams<T> {
    /// Plate constants. The beam fields are filled with the unit-width-strip
    /// equivalents (`rho = mu`, `I = h^3/12`).
    pub fn plate(surface_density: T, young_modulus: T, poisson: T, thickness: T) -> Result<Self> {
        let p = Self {
            surface_density,
            young_modulus,
            poisson,
            thickness,
            damping: T::zero(),
            line_density: surface_density,
            second_moment: thickness * thickness * thickness / real(12.0),
        };
        p.validate()?;
        Ok(p)
    }

    /// Beam constants. The plate fields are chosen so that the bending
    /// rigidity collapses to `E I` (`nu = 0`, `h = (12 I)^(1/3)`).
    pub fn beam(line_density: T, young_modulus: T, second_moment: T) -> Result<Self> {
        if second_moment <= T::zero() {
            return Err(Error::InvalidParameter(
                "second moment of area must be positive".into(),
            ));
        }
        let p = Self {
            surface_density: line_density,
            young_modulus,
            poisson: T::zero(),
            thickness: (real::<T>(12.0) * second_moment).cbrt(),
            damping: T::zero(),
            line_density,
            second_moment,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_damping(mut self, damping: T) -> Result<Self> {
        if damping < T::zero() {
            return Err(Error::InvalidParameter(
                "damping coefficient must be nonnegative".into(),
            ));
        }
        self.damping = damping;
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        if self.surface_density <= T::zero() || self.line_density <= T::zero() {
            return Err(Error::InvalidParameter("density must be positive".into()));
        }
        if self.young_modulus <= T::zero() {
            return Err(Error::InvalidParameter(
                "Young modulus must be positive".into(),
            ));
        }
        if self.thickness <= T::zero() {
            return Err(Error::InvalidParameter("thickness must be positive".into()));
        }
        if self.poisson < T::zero() || self.poisson >= real(0.5) {
            return Err(Error::InvalidParameter(
                "Poisson ratio must lie in [0, 0.5)".into(),
            ));
        }
        if self.damping < T::zero() {
            return Err(Error::InvalidParameter(
                "damping coefficient must be nonnegative".into(),
            ));
        }
        Ok(())
    }

    /// Beam flexural rigidity `E I`.
    pub fn flexural_rigidity(&self) -> T {
        self.young_modulus * self.second_moment
    }
}

/// Bending rigidity `D = E h^3 / (12 (1 - nu^2))`.
pub fn bending_rigidity<T: Real>(p: &MaterialParams<T>) -> Result<T> {
    let nu2 = p.poisson * p.poisson;
    if nu2 >= T::one() {
        return Err(Error::InvalidParameter(
            "Poisson ratio magnitude must be below 1".into(),
        ));
    }
    let h3 = p.thickness * p.thickness * p.thickness;
    Ok(p.young_modulus * h3 / (real::<T>(12.0) * (T::one() - nu2)))
}

/// Symmetric positive-definite constitutive matrix over the curvature
/// ordering `(k_xx, k_yy, k_xy)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BendingMatrix<T>(Matrix3<T>);

impl<T: Real> BendingMatrix<T> {
    pub fn matrix(&self) -> &Matrix3<T> {
        &self.0
    }

    /// Momenta `(M_xx, M_yy, M_xy)` produced by a curvature vector.
    pub fn momenta(&self, curvature: &Vector3<T>) -> Vector3<T> {
        self.0 * curvature
    }
}

/// Builds the constitutive matrix `D * [[1, nu, 0], [nu, 1, 0], [0, 0, (1 - nu)/2]]`.
pub fn bending_matrix<T: Real>(p: &MaterialParams<T>) -> Result<BendingMatrix<T>> {
    let d = bending_rigidity(p)?;
    let nu = p.poisson;
    let half = real::<T>(0.5);
    let m = Matrix3::new(
        d,
        d * nu,
        T::zero(),
        d * nu,
        d,
        T::zero(),
        T::zero(),
        T::zero(),
        d * half * (T::one() - nu),
    );
    Ok(BendingMatrix(m))
}

/// Pointwise energy variables of the plate: linear momentum density and the
/// curvature vector. The beam analog carries a single curvature component.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuousState<T> {
    /// Linear momentum density `alpha_w = mu v`.
    pub momentum: T,
    /// Curvature vector `(k_xx, k_yy, k_xy)`.
    pub curvature: Vector3<T>,
}

impl<T: Real> ContinuousState<T> {
    pub fn zero() -> Self {
        Self {
            momentum: T::zero(),
            curvature: Vector3::zeros(),
        }
    }
}

/// Pointwise co-energy variables: vertical velocity and bending momenta.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coenergy<T> {
    pub velocity: T,
    pub momenta: Vector3<T>,
}

/// Energy density `1/2 alpha_w^2 / mu + 1/2 k^T D k`; nonnegative.
pub fn hamiltonian_density<T: Real>(state: &ContinuousState<T>, p: &MaterialParams<T>) -> Result<T> {
    let d = bending_matrix(p)?;
    let half = real::<T>(0.5);
    let kinetic = half * state.momentum * state.momentum / p.surface_density;
    let bending = half * state.curvature.dot(&d.momenta(&state.curvature));
    Ok(kinetic + bending)
}

/// Pointwise co-energy map `v = alpha_w / mu`, `M = D k`.
pub fn coenergy_pointwise<T: Real>(
    state: &ContinuousState<T>,
    p: &MaterialParams<T>,
) -> Result<Coenergy<T>> {
    let d = bending_matrix(p)?;
    Ok(Coenergy {
        velocity: state.momentum / p.surface_density,
        momenta: d.momenta(&state.curvature),
    })
}
