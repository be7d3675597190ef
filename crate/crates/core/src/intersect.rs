//! Scheme-theoretic intersection of a color closure with the closed
//! orbit, as a formal sum of orbit colors with multiplicities, plus the
//! semi-invariant-weight identity used to cross-check multiplicities.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::datum::{Color, ColorKind, ColorSet, HomogeneousSphericalDatum};
use crate::error::{Error, Result};
use crate::fan::{ColoredCone, ColoredFan, DatumContext};
use crate::localize::{full_colors_of_orbit, localize_ctx, sigma0_chars, OrbitDatum};
use crate::roots::Character;

/// A formal nonnegative combination of orbit colors.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FormalColorSum {
    pub terms: BTreeMap<String, u32>,
}

impl FormalColorSum {
    fn add(&mut self, name: &str, mult: u32) {
        *self.terms.entry(name.to_string()).or_insert(0) += mult;
    }
}

impl std::fmt::Display for FormalColorSum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(name, m)| {
                if *m == 1 {
                    name.clone()
                } else {
                    format!("{m}*{name}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The unique orbit color moved by the minimal parabolic of root `i`.
/// Its absence (or ambiguity) cannot happen for a datum and colored cone
/// coming from an actual spherical embedding, so it is reported as such.
fn unique_moved<'a>(orbit_colors: &'a ColorSet, od: &OrbitDatum, i: usize) -> Result<&'a Color> {
    let moved = orbit_colors.moved(i);
    match moved.len() {
        1 => Ok(moved[0]),
        0 => Err(Error::ImpossibleForValidInput(format!(
            "no orbit color is moved by {} (it lies in S^p of the orbit)",
            od.datum0.root_system.label(i)
        ))),
        _ => Err(Error::ImpossibleForValidInput(format!(
            "several orbit colors are moved by {}",
            od.datum0.root_system.label(i)
        ))),
    }
}

fn char_in(set: &[Character], chi: &Character) -> bool {
    set.contains(chi)
}

/// Intersection of the closure of color `d_name` with the orbit of `cc`,
/// evaluated from the classification of the color's type.
pub fn intersect_color(
    datum: &HomogeneousSphericalDatum,
    fan: &ColoredFan,
    cc: &ColoredCone,
    d_name: &str,
) -> Result<FormalColorSum> {
    let ctx = DatumContext::new(datum)?;
    if !fan.contains(cc) {
        return Err(Error::NotInFan(format!("{{{}}}", cc.colors.join(", "))));
    }
    let od = localize_ctx(&ctx, cc)?;
    let orbit_colors = full_colors_of_orbit(&od)?;
    intersect_color_with(&ctx, cc, &od, &orbit_colors, d_name)
}

pub fn intersect_color_with(
    ctx: &DatumContext,
    cc: &ColoredCone,
    od: &OrbitDatum,
    orbit_colors: &ColorSet,
    d_name: &str,
) -> Result<FormalColorSum> {
    let color = ctx.colors.require(d_name)?;
    if cc.colors.iter().any(|c| c == d_name) {
        return Err(Error::ColorInF(d_name.to_string()));
    }
    let datum = ctx.datum;
    let rs = &datum.root_system;
    let sigma0 = sigma0_chars(od);
    let two = crate::linalg::rat(2, 1);

    let mut sum = FormalColorSum::default();
    match color.kind {
        ColorKind::A => {
            let surviving: Vec<usize> = color
                .varsigma
                .iter()
                .copied()
                .filter(|&i| char_in(&sigma0, &rs.simple_root_char(i)))
                .collect();
            if surviving.is_empty() {
                for &i in &color.varsigma {
                    sum.add(&unique_moved(orbit_colors, od, i)?.name, 1);
                }
            } else {
                let preimage = od
                    .psi
                    .iter()
                    .find(|(_, parent)| parent.as_str() == d_name)
                    .map(|(orbit_name, _)| orbit_name.clone())
                    .ok_or_else(|| {
                        Error::ImpossibleForValidInput(format!(
                            "{d_name} survives into Sigma0 but has no psi-preimage"
                        ))
                    })?;
                sum.add(&preimage, 1);
                for &i in &color.varsigma {
                    if !surviving.contains(&i) {
                        sum.add(&unique_moved(orbit_colors, od, i)?.name, 1);
                    }
                }
            }
        }
        ColorKind::TwoA => {
            let i = color.varsigma[0];
            let double = rs.simple_root_char(i).scaled(&two);
            if char_in(&sigma0, &double) {
                sum.add(&unique_moved(orbit_colors, od, i)?.name, 1);
            } else {
                sum.add(&unique_moved(orbit_colors, od, i)?.name, 2);
            }
        }
        ColorKind::B2 => {
            let (i, j) = (color.varsigma[0], color.varsigma[1]);
            let s = rs.simple_root_char(i).add(&rs.simple_root_char(j));
            let in_sigma0 = char_in(&sigma0, &s)
                || sigma0.iter().any(|c| c.scaled(&two) == s);
            if in_sigma0 {
                sum.add(&unique_moved(orbit_colors, od, i)?.name, 1);
            } else {
                sum.add(&unique_moved(orbit_colors, od, i)?.name, 1);
                sum.add(&unique_moved(orbit_colors, od, j)?.name, 1);
            }
        }
        ColorKind::B1 => {
            let i = color.varsigma[0];
            sum.add(&unique_moved(orbit_colors, od, i)?.name, 1);
        }
    }
    Ok(sum)
}

/// Weight coefficient of a color at a simple root: 2 when a 2a-color is
/// moved, 1 when any other color is moved, 0 otherwise.
fn weight_coeff(color: &Color, i: usize) -> u32 {
    if !color.varsigma.contains(&i) {
        0
    } else if color.kind == ColorKind::TwoA {
        2
    } else {
        1
    }
}

/// The identity `c(D, alpha) = sum mu_{D0} c(D0, alpha)` over all simple
/// roots, tying the multiplicities of an intersection to the weights of
/// the defining semi-invariant sections.
pub fn multiplicity_cross_check(
    datum: &HomogeneousSphericalDatum,
    od: &OrbitDatum,
    d_name: &str,
    sum: &FormalColorSum,
) -> Result<bool> {
    let parent_colors = crate::datum::full_colors(datum)?;
    let orbit_colors = full_colors_of_orbit(od)?;
    let parent = parent_colors.require(d_name)?;
    let n = datum.root_system.num_simple_roots();
    for i in 0..n {
        let lhs = weight_coeff(parent, i);
        let mut rhs: u32 = 0;
        for (name, mult) in &sum.terms {
            let oc = orbit_colors.require(name)?;
            rhs += mult * weight_coeff(oc, i);
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Convenience used by tests and the CLI: there must be no leftover zero
/// multiplicities.
pub fn sum_is_well_formed(sum: &FormalColorSum) -> bool {
    sum.terms.values().all(|m| !m.is_zero())
}
