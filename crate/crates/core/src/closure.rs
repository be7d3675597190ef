//! The colored fan of an orbit closure: star enumeration, the color
//! transfer map Phi, and the projected fan over the orbit's lattice.

use std::collections::BTreeSet;

use crate::datum::{ColorSet, HomogeneousSphericalDatum};
use crate::error::{Error, Result};
use crate::fan::{is_colored_face, ColoredCone, ColoredFan, DatumContext};
use crate::localize::{full_colors_of_orbit, localize_ctx, OrbitDatum};

/// All fan members having `cc` as a colored face, `cc` itself included.
pub fn star(
    datum: &HomogeneousSphericalDatum,
    fan: &ColoredFan,
    cc: &ColoredCone,
) -> Result<Vec<ColoredCone>> {
    let ctx = DatumContext::new(datum)?;
    star_ctx(&ctx, fan, cc)
}

pub fn star_ctx(
    ctx: &DatumContext,
    fan: &ColoredFan,
    cc: &ColoredCone,
) -> Result<Vec<ColoredCone>> {
    if !fan.contains(cc) {
        return Err(Error::NotInFan(format!(
            "({}; {{{}}})",
            cc.cone
                .generators()
                .iter()
                .map(|g| format!(
                    "({})",
                    g.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                ))
                .collect::<Vec<_>>()
                .join(" "),
            cc.colors.join(", ")
        )));
    }
    let mut out = Vec::new();
    for member in &fan.cones {
        if is_colored_face(ctx, cc, member)? {
            out.push(member.clone());
        }
    }
    Ok(out)
}

/// The color transfer `Phi(F') = psi^{-1}(F') ∪ ⋃ D0(alpha)` over the
/// simple roots alpha with `D(alpha) ⊆ F'`.
pub fn phi(
    od: &OrbitDatum,
    orbit_colors: &ColorSet,
    parent_colors: &ColorSet,
    f_prime: &[String],
) -> Result<Vec<String>> {
    for name in f_prime {
        parent_colors.require(name)?;
    }
    let mut out: BTreeSet<String> = BTreeSet::new();
    for (orbit_name, parent_name) in &od.psi {
        if f_prime.contains(parent_name) {
            out.insert(orbit_name.clone());
        }
    }
    let n = od.datum0.root_system.num_simple_roots();
    for i in 0..n {
        let moved = parent_colors.moved(i);
        if moved.iter().all(|c| f_prime.contains(&c.name)) {
            for c in orbit_colors.moved(i) {
                out.insert(c.name.clone());
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// The orbit datum together with the colored fan of the orbit closure:
/// one colored cone `(pi(C'), Phi(F'))` per star member.
pub fn closure_fan(
    datum: &HomogeneousSphericalDatum,
    fan: &ColoredFan,
    cc: &ColoredCone,
) -> Result<(OrbitDatum, ColoredFan)> {
    let ctx = DatumContext::new(datum)?;
    let members = star_ctx(&ctx, fan, cc)?;
    let od = localize_ctx(&ctx, cc)?;
    let orbit_colors = full_colors_of_orbit(&od)?;

    let mut image: BTreeSet<ColoredCone> = BTreeSet::new();
    for member in &members {
        let cone0 = member.cone.linear_image_int(od.pi())?;
        if !cone0.is_strictly_convex() {
            return Err(Error::TheoremViolation(
                "projected cone is not strictly convex".to_string(),
            ));
        }
        let colors0 = phi(&od, &orbit_colors, &ctx.colors, &member.colors)?;
        if !image.insert(ColoredCone::new(cone0, colors0)) {
            return Err(Error::TheoremViolation(
                "two star members project to the same colored cone".to_string(),
            ));
        }
    }
    let fan0 = ColoredFan { cones: image.into_iter().collect() };

    if !fan0.contains(&ColoredCone::trivial(od.datum0.rank())) {
        return Err(Error::TheoremViolation(
            "closure fan misses the trivial colored cone".to_string(),
        ));
    }
    let ctx0 = DatumContext::new(&od.datum0)?;
    let report = crate::fan::validate_fan_ctx(&ctx0, &fan0)?;
    if !report.is_valid() {
        return Err(Error::TheoremViolation(format!(
            "closure fan is not a valid colored fan:\n{report}"
        )));
    }

    Ok((od, fan0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::Cone;
    use crate::datum::full_colors;
    use crate::linalg::{int_vec, Int};
    use crate::testdata::{cc, clfan_fan};

    fn cc0(gens: &[&[i64]], colors: &[&str]) -> ColoredCone {
        let gens: Vec<Vec<Int>> = gens.iter().map(|g| int_vec(g)).collect();
        ColoredCone::new(
            Cone::from_generators(&gens, 2).unwrap(),
            colors.iter().map(|s| s.to_string()).collect(),
        )
    }

    #[test]
    fn star_of_e3() {
        let (datum, fan) = clfan_fan();
        let e3 = cc(&[&[0, 0, 1]], &["D_b(delta)"], 3);
        let members = star(&datum, &fan, &e3).unwrap();
        assert_eq!(members.len(), 4);
        assert!(members.contains(&e3));
        assert!(members.contains(&cc(&[&[-1, -1, 0], &[0, 0, 1]], &["D_b(delta)"], 3)));
        assert!(members.contains(&cc(
            &[&[-1, -1, 0], &[1, 0, 0], &[0, 0, 1]],
            &["D'", "D_b(delta)"],
            3
        )));
        assert!(members.contains(&cc(
            &[&[-1, -1, 0], &[0, 1, 0], &[0, 0, 1]],
            &["D_b(beta,gamma)", "D_b(delta)"],
            3
        )));
    }

    #[test]
    fn star_extremes() {
        let (datum, fan) = clfan_fan();
        let trivial = ColoredCone::trivial(3);
        assert_eq!(star(&datum, &fan, &trivial).unwrap().len(), fan.len());

        let top = cc(&[&[-1, -1, 0], &[1, 0, 0], &[0, 0, 1]], &["D'", "D_b(delta)"], 3);
        assert_eq!(star(&datum, &fan, &top).unwrap(), vec![top.clone()]);

        let absent = cc(&[&[1, 1, 1]], &[], 3);
        assert!(matches!(
            star(&datum, &fan, &absent),
            Err(Error::NotInFan(_))
        ));
    }

    #[test]
    fn phi_values_on_e3_orbit() {
        let (datum, fan) = clfan_fan();
        let e3 = cc(&[&[0, 0, 1]], &["D_b(delta)"], 3);
        let od = crate::localize::localize(&datum, &e3).unwrap();
        let orbit_colors = full_colors_of_orbit(&od).unwrap();
        let parent_colors = full_colors(&datum).unwrap();
        assert_eq!(
            orbit_colors.names(),
            vec!["D'@X0", "D''@X0", "D_b(beta,gamma)"]
        );

        let f1 = vec!["D'".to_string(), "D_b(delta)".to_string()];
        assert_eq!(
            phi(&od, &orbit_colors, &parent_colors, &f1).unwrap(),
            vec!["D'@X0"]
        );
        let f2 = vec!["D_b(beta,gamma)".to_string(), "D_b(delta)".to_string()];
        assert_eq!(
            phi(&od, &orbit_colors, &parent_colors, &f2).unwrap(),
            vec!["D_b(beta,gamma)"]
        );
        // the orbit's own colors transfer to nothing
        assert!(phi(&od, &orbit_colors, &parent_colors, &e3.colors)
            .unwrap()
            .is_empty());
        assert!(matches!(
            phi(&od, &orbit_colors, &parent_colors, &["no".to_string()]),
            Err(Error::UnknownColor(_))
        ));

        let _ = fan;
    }

    #[test]
    fn closure_fan_at_e3_matches_reference_listing() {
        let (datum, fan) = clfan_fan();
        let e3 = cc(&[&[0, 0, 1]], &["D_b(delta)"], 3);
        let (od, fan0) = closure_fan(&datum, &fan, &e3).unwrap();
        assert_eq!(od.datum0.rank(), 2);
        assert_eq!(fan0.len(), 4);
        let expected = ColoredFan::from_cones(vec![
            ColoredCone::trivial(2),
            cc0(&[&[-1, -1]], &[]),
            cc0(&[&[-1, -1], &[1, 0]], &["D'@X0"]),
            cc0(&[&[-1, -1], &[0, 1]], &["D_b(beta,gamma)"]),
        ]);
        assert_eq!(fan0, expected);
    }

    #[test]
    fn closure_fan_at_minus_e3() {
        let (datum, fan) = clfan_fan();
        let minus_e3 = cc(&[&[0, 0, -1]], &[], 3);
        let (od, fan0) = closure_fan(&datum, &fan, &minus_e3).unwrap();
        // same 4-cone combinatorics; D0 also contains D_b(delta)
        assert_eq!(fan0.len(), 4);
        let colors0 = full_colors_of_orbit(&od).unwrap();
        assert_eq!(
            colors0.names(),
            vec!["D'@X0", "D''@X0", "D_b(beta,gamma)", "D_b(delta)"]
        );
        let expected = ColoredFan::from_cones(vec![
            ColoredCone::trivial(2),
            cc0(&[&[-1, -1]], &[]),
            cc0(&[&[-1, -1], &[1, 0]], &["D'@X0"]),
            cc0(&[&[-1, -1], &[0, 1]], &["D_b(beta,gamma)"]),
        ]);
        assert_eq!(fan0, expected);
    }

    #[test]
    fn closure_fan_at_interior_ray_is_the_nine_cone_fan() {
        let (datum, fan) = clfan_fan();
        let ray = cc(&[&[-1, -1, 0]], &[], 3);
        let (od, fan0) = closure_fan(&datum, &fan, &ray).unwrap();
        assert_eq!(fan0.len(), 9);
        let colors0 = full_colors_of_orbit(&od).unwrap();
        assert_eq!(
            colors0.names(),
            vec!["D_b(alpha)", "D_b(beta)", "D_b(gamma)", "D_b(delta)"]
        );
        // pi sends e1 -> (1,0), e2 -> (-1,0), e3 -> (0,1)
        let expected = ColoredFan::from_cones(vec![
            ColoredCone::trivial(2),
            cc0(&[&[1, 0]], &[]),
            cc0(&[&[-1, 0]], &["D_b(beta)", "D_b(gamma)"]),
            cc0(&[&[0, 1]], &["D_b(delta)"]),
            cc0(&[&[0, -1]], &[]),
            cc0(&[&[1, 0], &[0, 1]], &["D_b(delta)"]),
            cc0(&[&[1, 0], &[0, -1]], &[]),
            cc0(&[&[-1, 0], &[0, 1]], &["D_b(beta)", "D_b(gamma)", "D_b(delta)"]),
            cc0(&[&[-1, 0], &[0, -1]], &["D_b(beta)", "D_b(gamma)"]),
        ]);
        assert_eq!(fan0, expected);
    }

    #[test]
    fn closure_fan_of_rank_zero_orbit() {
        // SL2/T at (V, {}): the orbit has rank 0, its closure fan is the
        // single trivial cone of the zero-dimensional lattice
        let datum = crate::testdata::datum_a_to_b();
        let v_cc = crate::testdata::cc(&[&[-1]], &[], 1);
        let fan = crate::fan::complete_fan(&datum, std::slice::from_ref(&v_cc)).unwrap();
        let (od, fan0) = closure_fan(&datum, &fan, &v_cc).unwrap();
        assert_eq!(od.datum0.rank(), 0);
        assert_eq!(fan0.cones, vec![ColoredCone::trivial(0)]);

        // at the trivial cone the closure fan reproduces the whole fan
        let trivial = ColoredCone::trivial(1);
        let (_od, fan0) = closure_fan(&datum, &fan, &trivial).unwrap();
        assert_eq!(fan0, fan);
    }

    #[test]
    fn closure_fan_cardinality_and_poset_embedding() {
        let (datum, fan) = clfan_fan();
        let ctx = DatumContext::new(&datum).unwrap();
        for member in &fan.cones {
            let members = star(&datum, &fan, member).unwrap();
            let (od, fan0) = closure_fan(&datum, &fan, member).unwrap();
            assert_eq!(fan0.len(), members.len(), "bijectivity");
            // order embedding through the bijection
            let ctx0 = DatumContext::new(&od.datum0).unwrap();
            let orbit_colors = full_colors_of_orbit(&od).unwrap();
            let images: Vec<ColoredCone> = members
                .iter()
                .map(|m| {
                    ColoredCone::new(
                        m.cone.linear_image_int(od.pi()).unwrap(),
                        phi(&od, &orbit_colors, &ctx.colors, &m.colors).unwrap(),
                    )
                })
                .collect();
            for (a, ia) in members.iter().zip(&images) {
                for (b, ib) in members.iter().zip(&images) {
                    assert_eq!(
                        is_colored_face(&ctx, a, b).unwrap(),
                        is_colored_face(&ctx0, ia, ib).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn functoriality_of_weight_lattices() {
        let (datum, fan) = clfan_fan();
        let ctx = DatumContext::new(&datum).unwrap();
        for member in &fan.cones {
            let od = localize_ctx(&ctx, member).unwrap();
            let orbit_colors = full_colors_of_orbit(&od).unwrap();
            let members = star(&datum, &fan, member).unwrap();
            for m in &members {
                let direct = localize_ctx(&ctx, m).unwrap();
                let image = ColoredCone::new(
                    m.cone.linear_image_int(od.pi()).unwrap(),
                    phi(&od, &orbit_colors, &ctx.colors, &m.colors).unwrap(),
                );
                let two_step = crate::localize::localize(&od.datum0, &image).unwrap();
                // express the two-step lattice inside M and compare
                let rows: Vec<Vec<Int>> = two_step
                    .m0_in_m
                    .rows()
                    .iter()
                    .map(|r| {
                        let mut out = vec![Int::from(0); datum.rank()];
                        for (c, row) in r.iter().zip(od.m0_in_m.rows()) {
                            for (o, x) in out.iter_mut().zip(row) {
                                *o += c * x;
                            }
                        }
                        out
                    })
                    .collect();
                let lifted = crate::linalg::IntLatticeBasis::from_rows(&rows, datum.rank());
                assert_eq!(lifted, direct.m0_in_m);
            }
        }
    }
}
