//! Localization at an orbit: from a homogeneous spherical datum and a
//! colored cone `(C, F)`, compute the homogeneous spherical datum of the
//! corresponding orbit together with the projection `pi: N -> N0` and the
//! association `psi` from orbit type-a colors back to their parents.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::cone::Cone;
use crate::datum::{full_colors, valuation_cone, ColorSet, HomogeneousSphericalDatum};
use crate::error::{Error, Result, ValidationReport};
use crate::fan::{validate_colored_cone_ctx, ColoredCone, DatumContext};
use crate::linalg::{
    dot_int, integer_kernel, primitive_generator, rat_vec, restrict_functional, IntLatticeBasis,
    Int,
};
use crate::roots::Character;

#[derive(Debug, Clone)]
pub struct OrbitDatum {
    /// The quadruple `(M0, Sigma0, S^p_0, D^a_0)` of the orbit, over the
    /// same root system; its `m_basis` consists of the characters of the
    /// rows of `m0_in_m`.
    pub datum0: HomogeneousSphericalDatum,
    /// M0 as a sublattice of M, HNF-canonical and saturated.
    pub m0_in_m: IntLatticeBasis,
    /// Orbit color name -> parent color name, for the type-a colors.
    pub psi: BTreeMap<String, String>,
}

impl OrbitDatum {
    /// The matrix of `pi : N -> N0` (rows are the M0 basis vectors).
    pub fn pi(&self) -> &[Vec<Int>] {
        self.m0_in_m.rows()
    }

    /// M-coordinates of the k-th spherical root of the orbit.
    pub fn sigma0_in_m(&self, k: usize) -> Vec<Int> {
        let coords = &self.datum0.sigma[k];
        let rank = self.m0_in_m.ambient();
        let mut out = vec![Int::zero(); rank];
        for (c, row) in coords.iter().zip(self.m0_in_m.rows()) {
            for (o, x) in out.iter_mut().zip(row) {
                *o += c * x;
            }
        }
        out
    }
}

/// Characters of the orbit's spherical roots (inside the parent's
/// character lattice).
pub fn sigma0_chars(od: &OrbitDatum) -> Vec<Character> {
    (0..od.datum0.sigma.len())
        .map(|k| od.datum0.sigma_char(k))
        .collect()
}

/// Homogeneous spherical datum of the orbit attached to `cc`.
pub fn localize(datum: &HomogeneousSphericalDatum, cc: &ColoredCone) -> Result<OrbitDatum> {
    let ctx = DatumContext::new(datum)?;
    localize_ctx(&ctx, cc)
}

pub fn localize_ctx(ctx: &DatumContext, cc: &ColoredCone) -> Result<OrbitDatum> {
    let datum = ctx.datum;
    let rank = datum.rank();
    let cc_report = validate_colored_cone_ctx(ctx, cc)?;
    if !cc_report.is_valid() {
        return Err(Error::InvalidColoredCone(cc_report.to_string()));
    }

    // M0 = M ∩ C^perp, saturated
    let m0 = integer_kernel(&cc.cone.generators(), rank);
    let rank0 = m0.rank();

    // cone(Sigma0) = cone(Sigma) ∩ M0_Q; its extremal rays must be
    // linearly independent and primitive in M0
    let cone_sigma = Cone::from_generators(&datum.sigma, rank)?;
    let span_cut = integer_kernel(m0.rows(), rank);
    let trace = cone_sigma.intersect_subspace(span_cut.rows())?;
    if !trace.is_strictly_convex() || trace.extreme_rays().len() != trace.dim() {
        return Err(Error::NonSimplicialTrace(format!(
            "{} extremal rays spanning dimension {}",
            trace.extreme_rays().len(),
            trace.dim()
        )));
    }
    let mut sigma0: Vec<Vec<Int>> = Vec::new();
    for ray in trace.extreme_rays() {
        let coords = primitive_generator(&rat_vec(ray), &m0).map_err(|e| {
            Error::NonSimplicialTrace(format!(
                "extremal ray ({}) has no primitive point in M0: {e}",
                ray.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            ))
        })?;
        sigma0.push(coords);
    }
    sigma0.sort();

    // S^p_0 = { alpha : D(alpha) ⊆ F }
    let n = datum.root_system.num_simple_roots();
    let s_p0: Vec<usize> = (0..n)
        .filter(|&i| {
            ctx.colors
                .moved(i)
                .iter()
                .all(|c| cc.colors.contains(&c.name))
        })
        .collect();

    // the orbit's weight-lattice basis, as characters of the parent group
    let m_basis0: Vec<Character> = m0
        .rows()
        .iter()
        .map(|row| datum.char_of_mcoords(row))
        .collect();

    // D^a_0: one fresh color per parent a-color moved by a simple root
    // that survives into Sigma0
    let sigma0_chars: Vec<Character> = sigma0
        .iter()
        .map(|coords| {
            let mut chi = Character::zero(datum.root_system.char_len());
            for (c, b) in coords.iter().zip(&m_basis0) {
                chi = chi.add(&b.scaled(&crate::linalg::Rat::from_integer(c.clone())));
            }
            chi
        })
        .collect();
    let mut colors_a0: Vec<(String, Vec<Int>)> = Vec::new();
    let mut psi = BTreeMap::new();
    for (name, rho) in &datum.colors_a {
        let parent = ctx.colors.get(name).expect("validated datum");
        let survives = parent.varsigma.iter().any(|&i| {
            let chi = datum.root_system.simple_root_char(i);
            sigma0_chars.contains(&chi)
        });
        if survives {
            let orbit_name = format!("{name}@X0");
            colors_a0.push((orbit_name.clone(), restrict_functional(rho, &m0)));
            psi.insert(orbit_name, name.clone());
        }
    }

    let datum0 = HomogeneousSphericalDatum {
        root_system: datum.root_system.clone(),
        m_basis: m_basis0,
        sigma: sigma0,
        s_p: s_p0,
        colors_a: colors_a0,
    };
    debug_assert_eq!(datum0.rank(), rank0);

    let report = crate::datum::validate_datum(&datum0);
    if !report.is_valid() {
        return Err(Error::InvalidDatum(format!(
            "localized datum fails validation (inconsistent input):\n{report}"
        )));
    }

    Ok(OrbitDatum { datum0, m0_in_m: m0, psi })
}

/// The full color set `D0` of the orbit.
pub fn full_colors_of_orbit(od: &OrbitDatum) -> Result<ColorSet> {
    full_colors(&od.datum0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Refinement {
    /// `dim(C ∩ V) = dim C` held and `Sigma0 = Sigma ∩ M0` was verified.
    Refined,
    NotApplicable,
}

/// When `dim(C ∩ V) = dim C`, the spherical roots of the orbit are
/// exactly the spherical roots lying in M0; verify it.
pub fn check_refinement(
    datum: &HomogeneousSphericalDatum,
    cc: &ColoredCone,
    od: &OrbitDatum,
) -> Result<Refinement> {
    let v = valuation_cone(datum)?;
    let meet = cc.cone.intersect(&v)?;
    if meet.dim() != cc.cone.dim() {
        return Ok(Refinement::NotApplicable);
    }
    let mut sigma_in_m0: Vec<Character> = Vec::new();
    for (k, s) in datum.sigma.iter().enumerate() {
        if od.m0_in_m.span_coords(&rat_vec(s)).is_some() {
            sigma_in_m0.push(datum.sigma_char(k));
        }
    }
    let mut sigma0 = sigma0_chars(od);
    let key = |c: &Character| c.coords.clone();
    sigma_in_m0.sort_by_key(key);
    sigma0.sort_by_key(key);
    if sigma0 == sigma_in_m0 {
        Ok(Refinement::Refined)
    } else {
        Err(Error::TheoremViolation(
            "dim(C ∩ V) = dim C but Sigma0 differs from Sigma ∩ M0".to_string(),
        ))
    }
}

/// Cross-checks tying the orbit datum back to the parent:
/// (i) pi(V) equals the orbit's valuation cone;
/// (ii) every spherical root nonpositive on C either survives into Sigma0
///      or cone(Sigma0) fits inside the cone of the remaining roots;
/// (iii) same alternative for every simple root moving a surviving
///       type-a color.
pub fn cross_validate(
    datum: &HomogeneousSphericalDatum,
    cc: &ColoredCone,
    od: &OrbitDatum,
) -> Result<ValidationReport> {
    let mut report = ValidationReport::new();
    let ctx = DatumContext::new(datum)?;
    let rank = datum.rank();

    // (i) pi(V) = V0
    let v0_direct = valuation_cone(&od.datum0)?;
    let v_image = ctx.v.linear_image_int(od.pi())?;
    if v0_direct != v_image {
        report.push("pi(V) differs from the valuation cone of the orbit".to_string());
    }

    let sigma0 = sigma0_chars(od);
    let sigma0_in_m: Vec<Vec<Int>> = (0..od.datum0.sigma.len())
        .map(|k| od.sigma0_in_m(k))
        .collect();

    let contained_in_sub_cone = |skip: usize| -> Result<bool> {
        let rest: Vec<Vec<Int>> = datum
            .sigma
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != skip)
            .map(|(_, s)| s.clone())
            .collect();
        let sub = Cone::from_generators(&rest, rank)?;
        for s0 in &sigma0_in_m {
            if !sub.contains(s0)? {
                return Ok(false);
            }
        }
        Ok(true)
    };

    // (ii)
    for (k, s) in datum.sigma.iter().enumerate() {
        let nonpositive = cc
            .cone
            .generators()
            .iter()
            .all(|g| !dot_int(g, s).is_positive());
        if !nonpositive {
            continue;
        }
        let survives = sigma0.contains(&datum.sigma_char(k));
        if !survives && !contained_in_sub_cone(k)? {
            report.push(format!(
                "sigma[{k}] is nonpositive on C, yet neither lies in Sigma0 nor does cone(Sigma0) avoid it"
            ));
        }
    }

    // (iii)
    for (name, _) in &datum.colors_a {
        let color = ctx.colors.get(name).expect("validated datum");
        let survives = color
            .varsigma
            .iter()
            .any(|&i| sigma0.contains(&datum.root_system.simple_root_char(i)));
        if !survives {
            continue;
        }
        for &i in &color.varsigma {
            let alpha = datum.root_system.simple_root_char(i);
            if sigma0.contains(&alpha) {
                continue;
            }
            let k = datum
                .simple_in_sigma(i)
                .expect("varsigma of an a-color consists of simple spherical roots");
            if !contained_in_sub_cone(k)? {
                report.push(format!(
                    "{} moves surviving color {} but neither lies in Sigma0 nor does cone(Sigma0) avoid it",
                    datum.root_system.label(i),
                    name
                ));
            }
        }
    }

    Ok(report)
}
