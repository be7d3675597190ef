//! Colored cones and colored fans: validity, the colored face relation,
//! face completion, completeness, and the orbit poset.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::cone::Cone;
use crate::datum::{full_colors, valuation_cone, ColorSet, HomogeneousSphericalDatum};
use crate::error::{Result, ValidationReport};
use crate::linalg::{dot_int, is_zero_vec, neg_vec, primitive_int, Int};

/// A pair `(C, F)` of a cone in N_Q and a subset of the colors, kept in
/// canonical form (canonical cone, sorted color names).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredCone {
    pub cone: Cone,
    pub colors: Vec<String>,
}

impl ColoredCone {
    pub fn new(cone: Cone, mut colors: Vec<String>) -> Self {
        colors.sort();
        colors.dedup();
        ColoredCone { cone, colors }
    }

    pub fn trivial(ambient: usize) -> Self {
        ColoredCone::new(Cone::zero(ambient), Vec::new())
    }
}

/// A face-closed collection of colored cones in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredFan {
    pub cones: Vec<ColoredCone>,
}

impl ColoredFan {
    pub fn from_cones(cones: Vec<ColoredCone>) -> Self {
        let set: BTreeSet<ColoredCone> = cones.into_iter().collect();
        ColoredFan { cones: set.into_iter().collect() }
    }

    pub fn contains(&self, cc: &ColoredCone) -> bool {
        self.cones.binary_search(cc).is_ok()
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }
}

/// Precomputed data shared by the fan-level checks.
pub struct DatumContext<'a> {
    pub datum: &'a HomogeneousSphericalDatum,
    pub colors: ColorSet,
    pub v: Cone,
}

impl<'a> DatumContext<'a> {
    pub fn new(datum: &'a HomogeneousSphericalDatum) -> Result<Self> {
        let colors = full_colors(datum)?;
        let v = valuation_cone(datum)?;
        Ok(DatumContext { datum, colors, v })
    }
}

fn check_colors_known(ctx: &DatumContext, cc: &ColoredCone) -> Result<()> {
    for name in &cc.colors {
        ctx.colors.require(name)?;
    }
    Ok(())
}

/// Validity of one colored cone: the relative interior meets V, every
/// extremal ray passes through some rho(D) with D in F or lies in V,
/// the cone is strictly convex with 0 outside rho(F), and cone(rho(F))
/// is contained in C.
pub fn validate_colored_cone(
    datum: &HomogeneousSphericalDatum,
    cc: &ColoredCone,
) -> Result<ValidationReport> {
    let ctx = DatumContext::new(datum)?;
    validate_colored_cone_ctx(&ctx, cc)
}

pub fn validate_colored_cone_ctx(
    ctx: &DatumContext,
    cc: &ColoredCone,
) -> Result<ValidationReport> {
    check_colors_known(ctx, cc)?;
    let mut report = ValidationReport::new();
    if cc.cone.ambient() != ctx.datum.rank() {
        report.push(format!(
            "cone lives in dimension {} but rank(M) = {}",
            cc.cone.ambient(),
            ctx.datum.rank()
        ));
        return Ok(report);
    }

    if !Cone::rel_interiors_meet_within(&cc.cone, &cc.cone, &ctx.v)? {
        report.push("relative interior of C does not meet the valuation cone".to_string());
    }

    if !cc.cone.is_strictly_convex() {
        report.push("C is not strictly convex".to_string());
    }

    let rho_f: Vec<(&str, &[Int])> = cc
        .colors
        .iter()
        .map(|name| {
            let c = ctx.colors.get(name).expect("checked above");
            (c.name.as_str(), c.rho.as_slice())
        })
        .collect();

    for (name, rho) in &rho_f {
        if is_zero_vec(rho) {
            report.push(format!("rho({name}) = 0 is not allowed in F"));
        } else if !cc.cone.contains(rho)? {
            report.push(format!("rho({name}) lies outside C"));
        }
    }

    // every extremal ray must carry a color of F or lie in V
    for ray in cc.cone.extreme_rays() {
        let carried = rho_f.iter().any(|(_, rho)| {
            primitive_int(rho).as_deref() == Some(ray.as_slice())
        });
        if !carried && !ctx.v.contains(ray)? {
            report.push(format!(
                "extremal ray ({}) carries no color of F and lies outside V",
                fmt_vec(ray)
            ));
        }
    }

    Ok(report)
}

fn fmt_vec(v: &[Int]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// The colored faces of `cc`: one for each geometric face whose relative
/// interior meets V, with the colors whose rho lands in the face.
pub fn colored_faces(
    datum: &HomogeneousSphericalDatum,
    cc: &ColoredCone,
) -> Result<Vec<ColoredCone>> {
    let ctx = DatumContext::new(datum)?;
    colored_faces_ctx(&ctx, cc)
}

pub fn colored_faces_ctx(ctx: &DatumContext, cc: &ColoredCone) -> Result<Vec<ColoredCone>> {
    check_colors_known(ctx, cc)?;
    let mut out = Vec::new();
    for face in cc.cone.faces() {
        if !Cone::rel_interiors_meet_within(&face, &face, &ctx.v)? {
            continue;
        }
        let colors: Vec<String> = cc
            .colors
            .iter()
            .filter(|name| {
                let rho = &ctx.colors.get(name).expect("checked").rho;
                face.contains(rho).unwrap_or(false)
            })
            .cloned()
            .collect();
        out.push(ColoredCone::new(face, colors));
    }
    out.sort();
    Ok(out)
}

/// Whether `cc1` is a colored face of `cc2`.
pub fn is_colored_face(ctx: &DatumContext, cc1: &ColoredCone, cc2: &ColoredCone) -> Result<bool> {
    if !Cone::is_face_of(&cc1.cone, &cc2.cone)? {
        return Ok(false);
    }
    let expected: Vec<String> = cc2
        .colors
        .iter()
        .filter(|name| {
            ctx.colors
                .get(name)
                .map(|c| cc1.cone.contains(&c.rho).unwrap_or(false))
                .unwrap_or(false)
        })
        .cloned()
        .collect();
    Ok(expected == cc1.colors)
}

/// Close a list of maximal colored cones under colored faces.
pub fn complete_fan(
    datum: &HomogeneousSphericalDatum,
    maximal: &[ColoredCone],
) -> Result<ColoredFan> {
    let ctx = DatumContext::new(datum)?;
    complete_fan_ctx(&ctx, maximal)
}

pub fn complete_fan_ctx(ctx: &DatumContext, maximal: &[ColoredCone]) -> Result<ColoredFan> {
    let mut all: BTreeSet<ColoredCone> = BTreeSet::new();
    for cc in maximal {
        for face in colored_faces_ctx(ctx, cc)? {
            all.insert(face);
        }
        all.insert(cc.clone());
    }
    Ok(ColoredFan { cones: all.into_iter().collect() })
}

/// Fan validity: every member valid, the collection face-closed, and the
/// relative interiors pairwise disjoint within V.
pub fn validate_fan(datum: &HomogeneousSphericalDatum, fan: &ColoredFan) -> Result<ValidationReport> {
    let ctx = DatumContext::new(datum)?;
    validate_fan_ctx(&ctx, fan)
}

pub fn validate_fan_ctx(ctx: &DatumContext, fan: &ColoredFan) -> Result<ValidationReport> {
    let mut report = ValidationReport::new();
    if fan.is_empty() {
        report.push("a colored fan must be nonempty".to_string());
        return Ok(report);
    }
    for cc in &fan.cones {
        let r = validate_colored_cone_ctx(ctx, cc)?;
        if !r.is_valid() {
            report.push(format!(
                "invalid colored cone ({}; {{{}}}): {}",
                fmt_gens(&cc.cone),
                cc.colors.join(", "),
                r.violations().join("; ")
            ));
        }
    }
    for cc in &fan.cones {
        for face in colored_faces_ctx(ctx, cc)? {
            if !fan.contains(&face) {
                report.push(format!(
                    "fan is not face-closed: ({}; {{{}}}) is a colored face of ({}; {{{}}}) but not a member",
                    fmt_gens(&face.cone),
                    face.colors.join(", "),
                    fmt_gens(&cc.cone),
                    cc.colors.join(", ")
                ));
            }
        }
    }
    for (i, a) in fan.cones.iter().enumerate() {
        for b in fan.cones.iter().skip(i + 1) {
            if Cone::rel_interiors_meet_within(&a.cone, &b.cone, &ctx.v)? {
                report.push(format!(
                    "relative interiors of ({}) and ({}) meet inside V",
                    fmt_gens(&a.cone),
                    fmt_gens(&b.cone)
                ));
            }
        }
    }
    Ok(report)
}

fn fmt_gens(cone: &Cone) -> String {
    cone.generators()
        .iter()
        .map(|g| format!("({})", fmt_vec(g)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Whether the cones of the fan cover the valuation cone.
///
/// Decided exactly: the hyperplanes bounding the fan members cut V into
/// finitely many regions; within each region, membership in any member is
/// constant, so one relative-interior sample per full-dimensional region
/// decides coverage.
pub fn is_complete(datum: &HomogeneousSphericalDatum, fan: &ColoredFan) -> Result<bool> {
    let ctx = DatumContext::new(datum)?;
    is_complete_ctx(&ctx, fan)
}

pub fn is_complete_ctx(ctx: &DatumContext, fan: &ColoredFan) -> Result<bool> {
    let ambient = ctx.datum.rank();
    let v_dim = ctx.v.dim();
    let span_gens = ctx.v.generators();

    // the union of the fan equals the union of its inclusion-maximal
    // members, and only their facet hyperplanes are needed to cut V into
    // membership-constant regions
    let contained_in = |a: &Cone, b: &Cone| -> Result<bool> {
        for g in a.generators() {
            if !b.contains(&g)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let mut maximal: Vec<&ColoredCone> = Vec::new();
    'outer: for cc in &fan.cones {
        for other in &fan.cones {
            if other.cone != cc.cone && contained_in(&cc.cone, &other.cone)? {
                continue 'outer;
            }
        }
        maximal.push(cc);
    }

    let mut hyperplanes: BTreeSet<Vec<Int>> = BTreeSet::new();
    for cc in &maximal {
        for h in cc.cone.facets() {
            let Some(mut p) = primitive_int(&h) else { continue };
            if let Some(first) = p.iter().find(|x| !x.is_zero()) {
                if first.is_negative() {
                    p = neg_vec(&p);
                }
            }
            // hyperplanes not cutting the span of V separate nothing
            if span_gens.iter().any(|g| !dot_int(&p, g).is_zero()) {
                hyperplanes.insert(p);
            }
        }
    }
    let hyperplanes: Vec<Vec<Int>> = hyperplanes.into_iter().collect();
    let k = hyperplanes.len();
    assert!(k < usize::BITS as usize, "too many hyperplanes for sign enumeration");

    for signs in 0..(1u64 << k) {
        let mut ineqs = ctx.v.facets();
        for (bit, h) in hyperplanes.iter().enumerate() {
            if signs >> bit & 1 == 1 {
                ineqs.push(h.clone());
            } else {
                ineqs.push(neg_vec(h));
            }
        }
        let region = Cone::from_inequalities(&ineqs, ambient)?;
        if region.dim() != v_dim {
            continue;
        }
        let sample = region.relative_interior_point();
        let covered = maximal
            .iter()
            .any(|cc| cc.cone.contains(&sample).unwrap_or(false));
        if !covered {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Hasse diagram of the orbit poset. Nodes are the colored cones; an edge
/// `(i, j)` records that node i is a colored face of node j with nothing
/// strictly between, i.e. the orbit of j lies in the closure of the orbit
/// of i, one step down.
#[derive(Debug, Clone)]
pub struct OrbitPoset {
    pub nodes: Vec<ColoredCone>,
    pub covers: Vec<(usize, usize)>,
}

pub fn orbit_poset(datum: &HomogeneousSphericalDatum, fan: &ColoredFan) -> Result<OrbitPoset> {
    let ctx = DatumContext::new(datum)?;
    orbit_poset_ctx(&ctx, fan)
}

pub fn orbit_poset_ctx(ctx: &DatumContext, fan: &ColoredFan) -> Result<OrbitPoset> {
    let n = fan.cones.len();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = is_colored_face(ctx, &fan.cones[i], &fan.cones[j])?;
        }
    }
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !leq[i][j] {
                continue;
            }
            let between = (0..n)
                .any(|m| m != i && m != j && leq[i][m] && leq[m][j]);
            if !between {
                covers.push((i, j));
            }
        }
    }
    Ok(OrbitPoset { nodes: fan.cones.clone(), covers })
}
