//! Spherical-mode indexing, coefficient vectors and evaluation of the vector
//! spherical modes M and N.
//!
//! Mode labels (block, l, m) with block A (electric, coefficients of N) or B
//! (magnetic, coefficients of M), 1 <= l <= l_max, |m| <= l, map onto a
//! linear index: the A block occupies the first half, and within a block
//! index = l^2 - 1 + (m + l). The three l = 1 A-modes therefore sit at
//! indices 0, 1, 2, which is the column layout the F operator assumes.

use nalgebra::DVector;
use num_complex::Complex64;

use super::{CVec3, Vec3};
use crate::error::{Error, Result};
use crate::specfun::{
    riccati_psi_table, riccati_xi_table, AngularTables, HankelKind,
};

/// Electric (A) or magnetic (B) coefficient block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    A,
    B,
}

/// Canonical linear indexing of truncated spherical-mode labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModeIndex {
    l_max: usize,
}

impl ModeIndex {
    pub fn new(l_max: usize) -> Result<Self> {
        if l_max < 1 {
            return Err(Error::Invalid("l_max must be at least 1".into()));
        }
        Ok(Self { l_max })
    }

    #[inline]
    pub fn l_max(&self) -> usize {
        self.l_max
    }

    /// Total number of modes N_sph = 2 l_max (l_max + 2).
    #[inline]
    pub fn n_sph(&self) -> usize {
        2 * self.l_max * (self.l_max + 2)
    }

    /// Number of (l, m) pairs in one block.
    #[inline]
    pub fn half(&self) -> usize {
        self.l_max * (self.l_max + 2)
    }

    /// Index of (l, m) within a block.
    #[inline]
    pub fn half_index(&self, l: usize, m: i64) -> usize {
        debug_assert!(l >= 1 && l <= self.l_max && m.unsigned_abs() as usize <= l);
        l * l - 1 + (m + l as i64) as usize
    }

    /// (l, m) of a within-block index.
    #[inline]
    pub fn half_label(&self, index: usize) -> (usize, i64) {
        debug_assert!(index < self.half());
        let t = index + 1;
        let l = t.isqrt();
        let m = (t - l * l) as i64 - l as i64;
        (l, m)
    }

    /// Global index of (block, l, m).
    #[inline]
    pub fn index(&self, block: Block, l: usize, m: i64) -> usize {
        let offset = match block {
            Block::A => 0,
            Block::B => self.half(),
        };
        offset + self.half_index(l, m)
    }

    /// (block, l, m) of a global index.
    #[inline]
    pub fn label(&self, index: usize) -> (Block, usize, i64) {
        debug_assert!(index < self.n_sph());
        let half = self.half();
        let (block, rest) = if index < half {
            (Block::A, index)
        } else {
            (Block::B, index - half)
        };
        let (l, m) = self.half_label(rest);
        (block, l, m)
    }

    /// All (l, m) labels of one block, in index order.
    pub fn half_labels(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        (0..self.half()).map(|i| self.half_label(i))
    }
}

/// Which radial functions evaluate the field of a coefficient vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    /// A^{(j)}, B^{(j)}: regular at the origin (Riccati-Bessel).
    Free,
    /// A^{(1)}, B^{(1)}: outgoing (Riccati-Hankel, q = 1).
    Outgoing,
    /// A^{(2)}, B^{(2)}: incoming (Riccati-Hankel, q = 2).
    Incoming,
}

/// Radial function family of a mode evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadialKind {
    Bessel,
    OutgoingHankel,
    IncomingHankel,
}

impl FieldKind {
    pub fn radial(self) -> RadialKind {
        match self {
            FieldKind::Free => RadialKind::Bessel,
            FieldKind::Outgoing => RadialKind::OutgoingHankel,
            FieldKind::Incoming => RadialKind::IncomingHankel,
        }
    }
}

/// M (magnetic-type) or N (electric-type) vector spherical mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VectorMode {
    M,
    N,
}

/// Electric or magnetic field of a coefficient vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldComponent {
    Electric,
    Magnetic,
}

/// Multipole coefficient vector of one field kind.
#[derive(Clone, Debug)]
pub struct SphericalFieldCoeffs {
    coeffs: DVector<Complex64>,
    kind: FieldKind,
    index: ModeIndex,
}

impl SphericalFieldCoeffs {
    pub fn zeros(kind: FieldKind, l_max: usize) -> Result<Self> {
        let index = ModeIndex::new(l_max)?;
        Ok(Self {
            coeffs: DVector::zeros(index.n_sph()),
            kind,
            index,
        })
    }

    pub fn from_vector(kind: FieldKind, l_max: usize, coeffs: DVector<Complex64>) -> Result<Self> {
        let index = ModeIndex::new(l_max)?;
        if coeffs.len() != index.n_sph() {
            return Err(Error::Invalid(format!(
                "coefficient vector has length {}, expected N_sph = {}",
                coeffs.len(),
                index.n_sph()
            )));
        }
        Ok(Self { coeffs, kind, index })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    /// Same coefficients reinterpreted as another field kind.
    pub fn reinterpret(&self, kind: FieldKind) -> Self {
        Self {
            coeffs: self.coeffs.clone(),
            kind,
            index: self.index,
        }
    }

    pub fn mode_index(&self) -> ModeIndex {
        self.index
    }

    pub fn l_max(&self) -> usize {
        self.index.l_max()
    }

    pub fn coeffs(&self) -> &DVector<Complex64> {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut DVector<Complex64> {
        &mut self.coeffs
    }

    pub fn get(&self, block: Block, l: usize, m: i64) -> Complex64 {
        self.coeffs[self.index.index(block, l, m)]
    }

    pub fn set(&mut self, block: Block, l: usize, m: i64, value: Complex64) {
        let i = self.index.index(block, l, m);
        self.coeffs[i] = value;
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.norm()
    }
}

/// i^n for signed n.
pub(crate) fn ipow(n: i64) -> Complex64 {
    match n.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// N^{(j)}_{1,m}(0), the only modes with a nonzero value at the origin.
fn n_mode_at_origin(m: i64) -> CVec3 {
    let c = 1.0 / (12.0 * std::f64::consts::PI).sqrt();
    let i = Complex64::i();
    match m {
        -1 => CVec3::new(c * i, c.into(), 0.0.into()),
        0 => CVec3::new(0.0.into(), 0.0.into(), std::f64::consts::SQRT_2 * c * i),
        1 => CVec3::new(-c * i, c.into(), 0.0.into()),
        _ => CVec3::zeros(),
    }
}

/// Radial tables (f_l, f_l') for all l <= l_max at argument x = k r.
fn radial_tables(
    radial: RadialKind,
    l_max: usize,
    x: f64,
) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    match radial {
        RadialKind::Bessel => {
            let (psi, dpsi) = riccati_psi_table(l_max, x);
            Ok((
                psi.into_iter().map(Complex64::from).collect(),
                dpsi.into_iter().map(Complex64::from).collect(),
            ))
        }
        RadialKind::OutgoingHankel => riccati_xi_table(HankelKind::Outgoing, l_max, x),
        RadialKind::IncomingHankel => riccati_xi_table(HankelKind::Incoming, l_max, x),
    }
}

struct SphericalPoint {
    x: f64, // k r
    theta: f64,
    phi: f64,
    u_r: Vec3,
    u_theta: Vec3,
    u_phi: Vec3,
}

fn spherical_point(point: &Vec3, k: f64) -> SphericalPoint {
    let r = point.norm();
    let theta = if r == 0.0 { 0.0 } else { (point.z / r).clamp(-1.0, 1.0).acos() };
    let phi = if point.x == 0.0 && point.y == 0.0 {
        0.0
    } else {
        point.y.atan2(point.x)
    };
    let (st, ct) = (theta.sin(), theta.cos());
    let (sp, cp) = (phi.sin(), phi.cos());
    SphericalPoint {
        x: k * r,
        theta,
        phi,
        u_r: Vec3::new(st * cp, st * sp, ct),
        u_theta: Vec3::new(ct * cp, ct * sp, -st),
        u_phi: Vec3::new(-sp, cp, 0.0),
    }
}

fn to_cartesian(sp: &SphericalPoint, comps: (Complex64, Complex64, Complex64)) -> CVec3 {
    let (er, et, ep) = comps;
    CVec3::new(
        er * sp.u_r.x + et * sp.u_theta.x + ep * sp.u_phi.x,
        er * sp.u_r.y + et * sp.u_theta.y + ep * sp.u_phi.y,
        er * sp.u_r.z + et * sp.u_theta.z + ep * sp.u_phi.z,
    )
}

/// Single vector spherical mode at a point, in Cartesian components.
pub fn eval_vector_mode(
    mode: VectorMode,
    radial: RadialKind,
    l: usize,
    m: i64,
    point: &Vec3,
    k: f64,
) -> Result<CVec3> {
    if l < 1 || m.unsigned_abs() as usize > l {
        return Err(Error::Domain(format!("invalid mode label l = {l}, m = {m}")));
    }
    let sp = spherical_point(point, k);
    if sp.x == 0.0 {
        return match radial {
            RadialKind::Bessel => Ok(match mode {
                VectorMode::M => CVec3::zeros(),
                VectorMode::N => {
                    if l == 1 {
                        n_mode_at_origin(m)
                    } else {
                        CVec3::zeros()
                    }
                }
            }),
            _ => Err(Error::SingularAtOrigin),
        };
    }
    let (f, df) = radial_tables(radial, l, sp.x)?;
    let tables = AngularTables::new(l, sp.theta);
    let comps = mode_spherical_components(mode, l, m, &sp, &tables, f[l], df[l]);
    Ok(to_cartesian(&sp, comps))
}

/// Spherical (r, theta, phi) components of one mode, given its radial values.
fn mode_spherical_components(
    mode: VectorMode,
    l: usize,
    m: i64,
    sp: &SphericalPoint,
    tables: &AngularTables,
    f: Complex64,
    df: Complex64,
) -> (Complex64, Complex64, Complex64) {
    let lam = (l * (l + 1)) as f64;
    let norm = 1.0 / (sp.x * lam.sqrt());
    let phase = Complex64::new(0.0, m as f64 * sp.phi).exp();
    let i = Complex64::i();
    match mode {
        VectorMode::M => {
            let et = -(m as f64) * tables.r(l, m) * f;
            let ep = -i * tables.tau(l, m) * f;
            (Complex64::new(0.0, 0.0), norm * phase * et, norm * phase * ep)
        }
        VectorMode::N => {
            let er = i * lam / sp.x * f * tables.p(l, m);
            let et = i * df * tables.tau(l, m);
            let ep = -(m as f64) * tables.r(l, m) * df;
            (norm * phase * er, norm * phase * et, norm * phase * ep)
        }
    }
}

/// Field of a coefficient vector at a point, in Cartesian components.
///
/// Electric fields are in units of P0/sqrt(eps_0), magnetic fields in units
/// of P0/sqrt(mu_0); the result is linear in the coefficients.
pub fn eval_field(
    phi: &SphericalFieldCoeffs,
    point: &Vec3,
    k: f64,
    which: FieldComponent,
) -> Result<CVec3> {
    let index = phi.mode_index();
    let l_max = index.l_max();
    let sp = spherical_point(point, k);
    let i = Complex64::i();

    if sp.x == 0.0 {
        if phi.kind() != FieldKind::Free {
            return Err(Error::SingularAtOrigin);
        }
        // Only the l = 1 N modes survive at the origin.
        let mut out = CVec3::zeros();
        for m in -1..=1 {
            let c = match which {
                FieldComponent::Electric => phi.get(Block::A, 1, m),
                FieldComponent::Magnetic => phi.get(Block::B, 1, m),
            };
            out += n_mode_at_origin(m).map(|v| v * c);
        }
        return Ok(out);
    }

    let (f, df) = radial_tables(phi.kind().radial(), l_max, sp.x)?;
    let tables = AngularTables::new(l_max, sp.theta);
    let mut acc = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    for (l, m) in index.half_labels() {
        let a = phi.get(Block::A, l, m);
        let b = phi.get(Block::B, l, m);
        // E = sum A N + i B M ; H = sum B N - i A M.
        let (cn, cm) = match which {
            FieldComponent::Electric => (a, i * b),
            FieldComponent::Magnetic => (b, -i * a),
        };
        if cn.norm_sqr() == 0.0 && cm.norm_sqr() == 0.0 {
            continue;
        }
        if cn.norm_sqr() != 0.0 {
            let n = mode_spherical_components(VectorMode::N, l, m, &sp, &tables, f[l], df[l]);
            acc.0 += cn * n.0;
            acc.1 += cn * n.1;
            acc.2 += cn * n.2;
        }
        if cm.norm_sqr() != 0.0 {
            let mm = mode_spherical_components(VectorMode::M, l, m, &sp, &tables, f[l], df[l]);
            acc.1 += cm * mm.1;
            acc.2 += cm * mm.2;
        }
    }
    Ok(to_cartesian(&sp, acc))
}

/// Multipole coefficients of the linearly polarized plane wave
/// E = e^{i k z} x_hat, H = e^{i k z} y_hat (a free field):
/// A^{(j)}_{l,m} = m i^l sqrt(pi (2l+1)) and
/// B^{(j)}_{l,m} = i^{l-1} sqrt(pi (2l+1)) for m = +-1, zero otherwise.
pub fn plane_wave_coeffs(l_max: usize) -> Result<SphericalFieldCoeffs> {
    let mut phi = SphericalFieldCoeffs::zeros(FieldKind::Free, l_max)?;
    for l in 1..=l_max {
        let root = (std::f64::consts::PI * (2 * l + 1) as f64).sqrt();
        for m in [-1i64, 1] {
            phi.set(Block::A, l, m, (m as f64) * ipow(l as i64) * root);
            phi.set(Block::B, l, m, ipow(l as i64 - 1) * root);
        }
    }
    Ok(phi)
}
