//! Command implementations behind the binary: document loading, the
//! cone selector, and human/machine rendering of every result.

use std::path::Path;

use crate::cone::Cone;
use crate::datum::{full_colors, ColorSet, HomogeneousSphericalDatum};
use crate::document::{
    canonical_document, emit_document, fan_of_document, load_document, Document,
};
use crate::error::Error;
use crate::fan::{
    is_complete, orbit_poset, validate_fan, ColoredCone, ColoredFan, DatumContext,
};
use crate::intersect::{intersect_color, multiplicity_cross_check, FormalColorSum};
use crate::linalg::Int;
use crate::localize::{
    check_refinement, cross_validate, full_colors_of_orbit, localize, sigma0_chars, OrbitDatum,
    Refinement,
};
use crate::roots::character_to_string;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Machine,
}

/// A command failure carrying the process exit code: 1 for validation
/// and computation failures, 2 for usage and parse errors.
#[derive(Debug)]
pub struct CmdError {
    pub exit_code: i32,
    pub message: String,
}

type CmdResult = std::result::Result<String, CmdError>;

fn usage_error(message: impl Into<String>) -> CmdError {
    CmdError { exit_code: 2, message: message.into() }
}

fn failure(message: impl Into<String>) -> CmdError {
    CmdError { exit_code: 1, message: message.into() }
}

fn from_error(e: Error) -> CmdError {
    match e {
        Error::Document(_) | Error::Parse(_) | Error::UnsupportedType(_) => {
            usage_error(e.to_string())
        }
        _ => failure(e.to_string()),
    }
}

fn load(path: &Path) -> std::result::Result<Document, CmdError> {
    load_document(path).map_err(from_error)
}

fn fmt_vec(v: &[Int]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn fmt_cone(cone: &Cone) -> String {
    if cone.is_zero() {
        return "0".to_string();
    }
    format!(
        "cone({})",
        cone.generators()
            .iter()
            .map(|g| fmt_vec(g))
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn fmt_colored_cone(cc: &ColoredCone) -> String {
    format!("({}, {{{}}})", fmt_cone(&cc.cone), cc.colors.join(", "))
}

/// Resolve a cone selector: either an index into the document's listed
/// maximal cones, or an inline `gens=(..),(..);colors=a,b` spec matched
/// against the completed fan.
pub fn resolve_selector(
    doc: &Document,
    maximal: &[ColoredCone],
    fan: &ColoredFan,
    selector: &str,
) -> std::result::Result<ColoredCone, CmdError> {
    let selector = selector.trim();
    if let Ok(index) = selector.parse::<usize>() {
        if index >= maximal.len() {
            return Err(usage_error(format!(
                "cone index {index} out of range: the document lists {} maximal cones",
                maximal.len()
            )));
        }
        return Ok(maximal[index].clone());
    }
    let (gens, colors) = parse_inline_selector(selector)?;
    let cone = Cone::from_generators(&gens, doc.datum.rank()).map_err(from_error)?;
    let cc = ColoredCone::new(cone, colors);
    if fan.contains(&cc) {
        Ok(cc)
    } else {
        Err(failure(format!(
            "no fan member matches {}",
            fmt_colored_cone(&cc)
        )))
    }
}

/// Split on commas not nested inside parentheses.
fn split_top_level(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                current.push(ch);
            }
            ',' if depth == 0 => {
                parts.push(current.trim().to_string());
                current.clear();
            }
            _ => current.push(ch),
        }
    }
    if !current.trim().is_empty() {
        parts.push(current.trim().to_string());
    }
    parts
}

fn parse_inline_selector(
    s: &str,
) -> std::result::Result<(Vec<Vec<Int>>, Vec<String>), CmdError> {
    let mut gens: Option<Vec<Vec<Int>>> = None;
    let mut colors: Option<Vec<String>> = None;
    for part in s.split(';') {
        let part = part.trim();
        if let Some(rest) = part.strip_prefix("gens=") {
            let mut vectors = Vec::new();
            for item in split_top_level(rest) {
                let inner = item
                    .strip_prefix('(')
                    .and_then(|x| x.strip_suffix(')'))
                    .ok_or_else(|| {
                        usage_error(format!("bad generator '{item}', expected (a,b,...)"))
                    })?;
                let coords = inner
                    .split(',')
                    .map(|x| {
                        x.trim().parse::<Int>().map_err(|_| {
                            usage_error(format!("bad integer '{x}' in generator"))
                        })
                    })
                    .collect::<std::result::Result<Vec<Int>, CmdError>>()?;
                vectors.push(coords);
            }
            gens = Some(vectors);
        } else if let Some(rest) = part.strip_prefix("colors=") {
            colors = Some(split_top_level(rest));
        } else if !part.is_empty() {
            return Err(usage_error(format!(
                "bad selector part '{part}', expected gens=... or colors=..."
            )));
        }
    }
    match gens {
        Some(g) => Ok((g, colors.unwrap_or_default())),
        None => Err(usage_error(
            "selector must be a cone index or 'gens=(..),(..);colors=a,b'",
        )),
    }
}

struct LoadedFan {
    doc: Document,
    maximal: Vec<ColoredCone>,
    fan: ColoredFan,
}

fn load_valid_fan(path: &Path) -> std::result::Result<LoadedFan, CmdError> {
    let doc = load(path)?;
    let report = crate::datum::validate_datum(&doc.datum);
    if !report.is_valid() {
        return Err(failure(format!("datum is invalid:\n{report}")));
    }
    let (maximal, fan) = fan_of_document(&doc).map_err(from_error)?;
    let report = validate_fan(&doc.datum, &fan).map_err(from_error)?;
    if !report.is_valid() {
        return Err(failure(format!("fan is invalid:\n{report}")));
    }
    Ok(LoadedFan { doc, maximal, fan })
}

fn machine_kv(out: &mut String, key: &str, value: &str) {
    out.push_str(key);
    out.push_str(" = ");
    out.push_str(value);
    out.push('\n');
}

fn toml_str(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn toml_str_list(items: &[String]) -> String {
    format!(
        "[{}]",
        items.iter().map(|s| toml_str(s)).collect::<Vec<_>>().join(", ")
    )
}

fn toml_vec_list(rows: &[Vec<Int>]) -> String {
    format!(
        "[{}]",
        rows.iter()
            .map(|r| format!(
                "[{}]",
                r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
            ))
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn colors_table(datum: &HomogeneousSphericalDatum, colors: &ColorSet, heading: &str) -> String {
    let mut out = String::new();
    out.push_str(heading);
    out.push('\n');
    for c in colors.colors() {
        let moved: Vec<&str> = c
            .varsigma
            .iter()
            .map(|&i| datum.root_system.label(i))
            .collect();
        out.push_str(&format!(
            "  {:<20} kind {:<3} rho {:<16} varsigma {{{}}}\n",
            c.name,
            c.kind.to_string(),
            fmt_vec(&c.rho),
            moved.join(", ")
        ));
    }
    out
}

fn colors_machine(colors: &ColorSet, datum: &HomogeneousSphericalDatum, key: &str) -> String {
    let mut out = String::new();
    for c in colors.colors() {
        out.push_str(&format!("\n[[{key}]]\n"));
        machine_kv(&mut out, "name", &toml_str(&c.name));
        machine_kv(&mut out, "kind", &toml_str(&c.kind.to_string()));
        machine_kv(&mut out, "rho", &toml_vec_list(std::slice::from_ref(&c.rho)));
        let moved: Vec<String> = c
            .varsigma
            .iter()
            .map(|&i| datum.root_system.label(i).to_string())
            .collect();
        machine_kv(&mut out, "varsigma", &toml_str_list(&moved));
    }
    out
}

fn fan_listing(fan: &[ColoredCone]) -> String {
    fan.iter()
        .map(|cc| format!("  {}", fmt_colored_cone(cc)))
        .collect::<Vec<_>>()
        .join("\n")
}

fn fan_machine(fan: &[ColoredCone], key: &str) -> String {
    let mut out = String::new();
    for cc in fan {
        out.push_str(&format!("\n[[{key}]]\n"));
        machine_kv(&mut out, "generators", &toml_vec_list(&cc.cone.generators()));
        machine_kv(&mut out, "colors", &toml_str_list(&cc.colors));
    }
    out
}

fn orbit_report(
    datum: &HomogeneousSphericalDatum,
    cc: &ColoredCone,
    od: &OrbitDatum,
    format: Format,
) -> std::result::Result<String, CmdError> {
    let rs = &datum.root_system;
    let colors0 = full_colors_of_orbit(od).map_err(from_error)?;
    let refinement = check_refinement(datum, cc, od).map_err(from_error)?;
    let sp0: Vec<String> = od
        .datum0
        .s_p
        .iter()
        .map(|&i| rs.label(i).to_string())
        .collect();
    match format {
        Format::Human => {
            let mut out = String::new();
            out.push_str(&format!("orbit of {}\n", fmt_colored_cone(cc)));
            if od.m0_in_m.rank() == 0 {
                out.push_str("M0 = {0}\n");
            } else {
                out.push_str("M0 basis (rows, M-coordinates):\n");
                for row in od.m0_in_m.rows() {
                    out.push_str(&format!(
                        "  {}  = {}\n",
                        fmt_vec(row),
                        character_to_string(rs, &datum.char_of_mcoords(row))
                    ));
                }
            }
            let sigma0 = sigma0_chars(od);
            if sigma0.is_empty() {
                out.push_str("Sigma0 = {}\n");
            } else {
                out.push_str("Sigma0:\n");
                for (k, chi) in sigma0.iter().enumerate() {
                    out.push_str(&format!(
                        "  {}  = {}\n",
                        fmt_vec(&od.datum0.sigma[k]),
                        character_to_string(rs, chi)
                    ));
                }
            }
            out.push_str(&format!("S^p_0 = {{{}}}\n", sp0.join(", ")));
            if od.psi.is_empty() {
                out.push_str("psi: (no type-a colors on the orbit)\n");
            } else {
                out.push_str("psi:\n");
                for (orbit_name, parent) in &od.psi {
                    out.push_str(&format!("  {orbit_name} -> {parent}\n"));
                }
            }
            out.push_str(&colors_table(&od.datum0, &colors0, "colors of the orbit:"));
            out.push_str(&format!(
                "refinement (dim(C ∩ V) = dim C): {}\n",
                match refinement {
                    Refinement::Refined => "applies, Sigma0 = Sigma ∩ M0 verified",
                    Refinement::NotApplicable => "not applicable",
                }
            ));
            Ok(out)
        }
        Format::Machine => {
            let mut out = String::new();
            machine_kv(&mut out, "m0_basis", &toml_vec_list(od.m0_in_m.rows()));
            machine_kv(&mut out, "sigma0", &toml_vec_list(&od.datum0.sigma));
            let sigma0_m: Vec<Vec<Int>> = (0..od.datum0.sigma.len())
                .map(|k| od.sigma0_in_m(k))
                .collect();
            machine_kv(&mut out, "sigma0_in_m", &toml_vec_list(&sigma0_m));
            machine_kv(&mut out, "s_p0", &toml_str_list(&sp0));
            machine_kv(
                &mut out,
                "refinement",
                &toml_str(match refinement {
                    Refinement::Refined => "refined",
                    Refinement::NotApplicable => "not_applicable",
                }),
            );
            for (orbit_name, parent) in &od.psi {
                out.push_str("\n[[psi]]\n");
                machine_kv(&mut out, "orbit_color", &toml_str(orbit_name));
                machine_kv(&mut out, "parent_color", &toml_str(parent));
            }
            out.push_str(&colors_machine(&colors0, &od.datum0, "colors0"));
            Ok(out)
        }
    }
}

fn run_cross_validation(
    datum: &HomogeneousSphericalDatum,
    fan: &ColoredFan,
    restrict_to: Option<&ColoredCone>,
) -> CmdResult {
    let ctx = DatumContext::new(datum).map_err(from_error)?;
    let mut out = String::new();
    let mut ok = true;
    let members: Vec<&ColoredCone> = match restrict_to {
        Some(cc) => vec![cc],
        None => fan.cones.iter().collect(),
    };
    for member in members {
        let od = localize(datum, member).map_err(from_error)?;
        let report = cross_validate(datum, member, &od).map_err(from_error)?;
        if !report.is_valid() {
            ok = false;
            out.push_str(&format!(
                "cross-validation failed at {}:\n{report}\n",
                fmt_colored_cone(member)
            ));
            continue;
        }
        let orbit_colors = full_colors_of_orbit(&od).map_err(from_error)?;
        for name in ctx.colors.names() {
            if member.colors.contains(&name) {
                continue;
            }
            let sum = crate::intersect::intersect_color_with(
                &ctx,
                member,
                &od,
                &orbit_colors,
                &name,
            )
            .map_err(from_error)?;
            if !multiplicity_cross_check(datum, &od, &name, &sum).map_err(from_error)? {
                ok = false;
                out.push_str(&format!(
                    "multiplicity identity fails for {name} at {}\n",
                    fmt_colored_cone(member)
                ));
            }
        }
    }
    if ok {
        out.push_str("cross-validation: all orbit checks passed\n");
        Ok(out)
    } else {
        Err(failure(out))
    }
}

pub fn cmd_validate(
    path: &Path,
    format: Format,
    check_complete: bool,
    cross_validate_flag: bool,
) -> CmdResult {
    let doc = load(path)?;
    let datum_report = crate::datum::validate_datum(&doc.datum);
    if !datum_report.is_valid() {
        return Err(failure(format!("datum is invalid:\n{datum_report}")));
    }
    let (maximal, fan) = fan_of_document(&doc).map_err(from_error)?;
    let fan_report = validate_fan(&doc.datum, &fan).map_err(from_error)?;
    if !fan_report.is_valid() {
        return Err(failure(format!("fan is invalid:\n{fan_report}")));
    }

    let mut out = String::new();
    match format {
        Format::Human => {
            out.push_str("datum: paper-level checks passed\n");
            let colors = full_colors(&doc.datum).map_err(from_error)?;
            out.push_str(&colors_table(&doc.datum, &colors, "colors:"));
            out.push_str(&format!(
                "fan: valid ({} colored cones, {} maximal listed)\n",
                fan.len(),
                maximal.len()
            ));
            if check_complete {
                let complete = is_complete(&doc.datum, &fan).map_err(from_error)?;
                out.push_str(&format!(
                    "completeness: the fan {} the valuation cone\n",
                    if complete { "covers" } else { "does not cover" }
                ));
            }
        }
        Format::Machine => {
            let canonical = canonical_document(&doc).map_err(from_error)?;
            out.push_str(&emit_document(&canonical));
        }
    }
    if cross_validate_flag {
        let cv = run_cross_validation(&doc.datum, &fan, None)?;
        if format == Format::Human {
            out.push_str(&cv);
        }
    }
    Ok(out)
}

pub fn cmd_colors(path: &Path, format: Format) -> CmdResult {
    let doc = load(path)?;
    let colors = full_colors(&doc.datum).map_err(from_error)?;
    match format {
        Format::Human => Ok(colors_table(&doc.datum, &colors, "colors:")),
        Format::Machine => Ok(colors_machine(&colors, &doc.datum, "colors")
            .trim_start()
            .to_string()),
    }
}

pub fn cmd_orbit(
    path: &Path,
    selector: &str,
    format: Format,
    cross_validate_flag: bool,
) -> CmdResult {
    let loaded = load_valid_fan(path)?;
    let cc = resolve_selector(&loaded.doc, &loaded.maximal, &loaded.fan, selector)?;
    let od = localize(&loaded.doc.datum, &cc).map_err(from_error)?;
    let mut out = orbit_report(&loaded.doc.datum, &cc, &od, format)?;
    if cross_validate_flag {
        let cv = run_cross_validation(&loaded.doc.datum, &loaded.fan, Some(&cc))?;
        if format == Format::Human {
            out.push_str(&cv);
        }
    }
    Ok(out)
}

pub fn cmd_star(path: &Path, selector: &str, format: Format) -> CmdResult {
    let loaded = load_valid_fan(path)?;
    let cc = resolve_selector(&loaded.doc, &loaded.maximal, &loaded.fan, selector)?;
    let members =
        crate::closure::star(&loaded.doc.datum, &loaded.fan, &cc).map_err(from_error)?;
    match format {
        Format::Human => Ok(format!(
            "star of {} ({} members):\n{}\n",
            fmt_colored_cone(&cc),
            members.len(),
            fan_listing(&members)
        )),
        Format::Machine => Ok(fan_machine(&members, "star").trim_start().to_string()),
    }
}

pub fn cmd_closure_fan(path: &Path, selector: &str, format: Format) -> CmdResult {
    let loaded = load_valid_fan(path)?;
    let cc = resolve_selector(&loaded.doc, &loaded.maximal, &loaded.fan, selector)?;
    let (od, fan0) =
        crate::closure::closure_fan(&loaded.doc.datum, &loaded.fan, &cc).map_err(from_error)?;
    match format {
        Format::Human => {
            let mut out = orbit_report(&loaded.doc.datum, &cc, &od, format)?;
            out.push_str(&format!(
                "colored fan of the orbit closure ({} cones over N0 of rank {}):\n{}\n",
                fan0.len(),
                od.datum0.rank(),
                fan_listing(&fan0.cones)
            ));
            Ok(out)
        }
        Format::Machine => {
            let mut out = orbit_report(&loaded.doc.datum, &cc, &od, format)?;
            out.push_str(&fan_machine(&fan0.cones, "fan0"));
            Ok(out)
        }
    }
}

pub fn cmd_intersect(path: &Path, selector: &str, color: &str, format: Format) -> CmdResult {
    let loaded = load_valid_fan(path)?;
    let cc = resolve_selector(&loaded.doc, &loaded.maximal, &loaded.fan, selector)?;
    match intersect_color(&loaded.doc.datum, &loaded.fan, &cc, color) {
        Ok(sum) => {
            let od = localize(&loaded.doc.datum, &cc).map_err(from_error)?;
            let checked = multiplicity_cross_check(&loaded.doc.datum, &od, color, &sum)
                .map_err(from_error)?;
            render_intersection(color, &sum, checked, format)
        }
        Err(Error::ColorInF(name)) => match format {
            Format::Human => Ok(format!("X0 ⊆ closure({name})\n")),
            Format::Machine => {
                let mut out = String::new();
                machine_kv(&mut out, "color", &toml_str(&name));
                machine_kv(&mut out, "orbit_in_closure", "true");
                Ok(out)
            }
        },
        Err(e) => Err(from_error(e)),
    }
}

fn render_intersection(
    color: &str,
    sum: &FormalColorSum,
    checked: bool,
    format: Format,
) -> CmdResult {
    if !checked {
        return Err(failure(format!(
            "multiplicity identity fails for closure({color}) ∩ X0 = {sum}"
        )));
    }
    match format {
        Format::Human => Ok(format!("closure({color}) ∩ X0 = {sum}\n")),
        Format::Machine => {
            let mut out = String::new();
            machine_kv(&mut out, "color", &toml_str(color));
            machine_kv(&mut out, "orbit_in_closure", "false");
            machine_kv(&mut out, "cross_check", "true");
            for (name, mult) in &sum.terms {
                out.push_str("\n[[terms]]\n");
                machine_kv(&mut out, "orbit_color", &toml_str(name));
                machine_kv(&mut out, "multiplicity", &mult.to_string());
            }
            Ok(out)
        }
    }
}

pub fn cmd_poset(path: &Path, format: Format) -> CmdResult {
    let loaded = load_valid_fan(path)?;
    let poset = orbit_poset(&loaded.doc.datum, &loaded.fan).map_err(from_error)?;
    match format {
        Format::Human => {
            let mut out = String::new();
            out.push_str(&format!("orbit poset ({} orbits):\n", poset.nodes.len()));
            for (i, node) in poset.nodes.iter().enumerate() {
                out.push_str(&format!("  [{i}] {}\n", fmt_colored_cone(node)));
            }
            out.push_str("closure covers (orbit of second lies in closure of orbit of first):\n");
            for &(i, j) in &poset.covers {
                out.push_str(&format!("  [{i}] > [{j}]\n"));
            }
            Ok(out)
        }
        Format::Machine => {
            let mut out = fan_machine(&poset.nodes, "nodes").trim_start().to_string();
            for &(i, j) in &poset.covers {
                out.push_str("\n[[covers]]\n");
                machine_kv(&mut out, "face", &i.to_string());
                machine_kv(&mut out, "cone", &j.to_string());
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_selector_parsing() {
        let (gens, colors) =
            parse_inline_selector("gens=(0,0,1),(-1,-1,0);colors=D',D_b(beta,gamma)").unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[1], crate::linalg::int_vec(&[-1, -1, 0]));
        assert_eq!(colors, vec!["D'", "D_b(beta,gamma)"]);

        let (gens, colors) = parse_inline_selector("gens=(1,2);colors=").unwrap();
        assert_eq!(gens, vec![crate::linalg::int_vec(&[1, 2])]);
        assert!(colors.is_empty());

        assert!(parse_inline_selector("colors=D'").is_err());
        assert!(parse_inline_selector("gens=1,2").is_err());
    }

    #[test]
    fn split_top_level_respects_parens() {
        assert_eq!(
            split_top_level("D',D_b(beta,gamma),D''"),
            vec!["D'", "D_b(beta,gamma)", "D''"]
        );
        assert_eq!(split_top_level(""), Vec::<String>::new());
    }
}
