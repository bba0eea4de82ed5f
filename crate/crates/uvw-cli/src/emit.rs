//! Byte-stable document emitters: catalog listings, equation sets in text,
//! LaTeX and JSON, fans and reduction maps.

use anyhow::Result;
use serde_json::json;
use uvw_core::catalog::Catalog;
use uvw_core::equations::EquationSet;
use uvw_core::fan::GFan;
use uvw_core::io::poly_to_json;
use uvw_core::poly::{Poly, RenderStyle};
use uvw_core::reductions::{ReductionMap, VarTarget};

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Text,
    Json,
    Latex,
}

/// LaTeX form of an object label: P1 -> P_1, ΣP2 -> \Sigma P_2, 112 -> 112.
fn label_latex(label: &str) -> String {
    let (sigma, rest) = match label.strip_prefix("ΣP") {
        Some(rest) => (true, format!("P{}", rest)),
        None => (false, label.to_string()),
    };
    let split = rest.find(|c: char| c.is_ascii_digit());
    let body = match split {
        Some(0) | None => rest.clone(),
        Some(i) => format!("{}_{{{}}}", &rest[..i], &rest[i..]),
    };
    if sigma {
        format!("\\Sigma {}", body)
    } else {
        body
    }
}

fn u_names(cat: &Catalog, style: Style) -> Vec<String> {
    cat.labels()
        .iter()
        .map(|l| match style {
            Style::Latex => format!("u_{{{}}}", label_latex(l)),
            _ => format!("u[{}]", l),
        })
        .collect()
}

fn y_names(n: usize, style: Style) -> Vec<String> {
    (0..n)
        .map(|i| match style {
            Style::Latex => format!("y_{{{}}}", i + 1),
            _ => format!("y{}", i + 1),
        })
        .collect()
}

fn render(p: &Poly, names: &[String], style: Style) -> String {
    match style {
        Style::Latex => p.render(names, RenderStyle::Latex),
        _ => p.render(names, RenderStyle::Text),
    }
}

pub fn u_equations(cat: &Catalog, eq: &EquationSet, style: Style) -> Result<String> {
    if style == Style::Json {
        let items: Vec<serde_json::Value> = (0..cat.len())
            .map(|x| {
                let crossing: serde_json::Map<String, serde_json::Value> = (0..cat.len())
                    .filter(|&y| cat.c(x, y) > 0)
                    .map(|y| (cat.objects[y].label.clone(), json!(cat.c(x, y))))
                    .collect();
                json!({ "object": cat.objects[x].label, "crossing": crossing })
            })
            .collect();
        return Ok(serde_json::to_string_pretty(&json!({
            "catalog": cat.name,
            "kind": "u",
            "equations": items,
        }))? + "\n");
    }
    let names = u_names(cat, style);
    let mut out = String::new();
    for x in 0..cat.len() {
        let cross = eq.crossing_monomial(cat, x);
        match style {
            Style::Latex => out.push_str(&format!(
                "u_{{{}}} + {} = 1\n",
                label_latex(&cat.objects[x].label),
                render(&cross, &names, style)
            )),
            _ => out.push_str(&format!(
                "u[{}] + {} = 1\n",
                cat.objects[x].label,
                render(&cross, &names, style)
            )),
        }
    }
    Ok(out)
}

pub fn fhat_polynomials(cat: &Catalog, eq: &EquationSet, style: Style) -> Result<String> {
    let names = u_names(cat, style);
    if style == Style::Json {
        let labels: Vec<String> = cat.labels().iter().map(|s| s.to_string()).collect();
        let items: Vec<serde_json::Value> = cat
            .module_objects()
            .into_iter()
            .map(|x| {
                let fh = eq.fhat(cat, x)?;
                Ok(json!({
                    "object": cat.objects[x].label,
                    "polynomial": poly_to_json(&fh, &labels),
                }))
            })
            .collect::<Result<_>>()?;
        return Ok(serde_json::to_string_pretty(&json!({
            "catalog": cat.name,
            "kind": "fhat",
            "polynomials": items,
        }))? + "\n");
    }
    let mut out = String::new();
    for x in cat.module_objects() {
        let fh = eq.fhat(cat, x)?;
        match style {
            Style::Latex => out.push_str(&format!(
                "\\widehat{{F}}_{{{}}} = {}\n",
                label_latex(&cat.objects[x].label),
                render(&fh, &names, style)
            )),
            _ => out.push_str(&format!(
                "Fhat[{}] = {}\n",
                cat.objects[x].label,
                render(&fh, &names, style)
            )),
        }
    }
    Ok(out)
}

pub fn v_formulas(cat: &Catalog, eq: &EquationSet, style: Style) -> Result<String> {
    let ys = y_names(cat.n(), style);
    if style == Style::Json {
        let yl: Vec<String> = (0..cat.n()).map(|i| format!("y{}", i + 1)).collect();
        let items: Vec<serde_json::Value> = (0..cat.len())
            .map(|x| {
                let v = eq.v_rational(x);
                json!({
                    "object": cat.objects[x].label,
                    "num": poly_to_json(&v.num, &yl),
                    "den": poly_to_json(&v.den, &yl),
                })
            })
            .collect();
        return Ok(serde_json::to_string_pretty(&json!({
            "catalog": cat.name,
            "kind": "v",
            "formulas": items,
        }))? + "\n");
    }
    let mut out = String::new();
    for x in 0..cat.len() {
        let v = eq.v_rational(x);
        match style {
            Style::Latex => out.push_str(&format!(
                "v_{{{}}} = \\frac{{{}}}{{{}}}\n",
                label_latex(&cat.objects[x].label),
                render(&v.num, &ys, style),
                render(&v.den, &ys, style)
            )),
            _ => out.push_str(&format!(
                "v[{}] = ({}) / ({})\n",
                cat.objects[x].label,
                render(&v.num, &ys, style),
                render(&v.den, &ys, style)
            )),
        }
    }
    Ok(out)
}

pub fn list_text(cat: &Catalog) -> String {
    let mut out = format!(
        "catalog {}: {} objects over {} vertices\n",
        cat.name,
        cat.len(),
        cat.n()
    );
    for (i, o) in cat.objects.iter().enumerate() {
        out.push_str(&format!(
            "{:3}  {:10} g={:?} d={:?} {}{}\n",
            i,
            o.label,
            o.g,
            o.d,
            if o.rigid { "rigid" } else { "non-rigid" },
            match cat.tau_obj[i] {
                Some(t) => format!(" tau -> {}", cat.objects[t].label),
                None => String::new(),
            }
        ));
    }
    out
}

pub fn list_json(cat: &Catalog, _eq: &EquationSet) -> Result<String> {
    let items: Vec<serde_json::Value> = (0..cat.len())
        .map(|i| {
            let o = &cat.objects[i];
            json!({
                "label": o.label,
                "g": o.g,
                "d": o.d,
                "rigid": o.rigid,
                "tau": cat.tau_obj[i].map(|t| cat.objects[t].label.clone()),
            })
        })
        .collect();
    Ok(serde_json::to_string_pretty(&json!({
        "catalog": cat.name,
        "catalog_hash": format!("{:016x}", uvw_core::io::catalog_hash(cat)),
        "objects": items,
    }))? + "\n")
}

pub fn fan_text(cat: &Catalog, fan: &GFan) -> String {
    let mut out = format!("g-vector fan of {}\n", cat.name);
    for (obj, g) in &fan.rays {
        out.push_str(&format!("ray {:10} {:?}\n", cat.objects[*obj].label, g));
    }
    for cone in &fan.max_cones {
        let names: Vec<&str> = cone
            .iter()
            .map(|&r| cat.objects[fan.rays[r].0].label.as_str())
            .collect();
        out.push_str(&format!("cone {{{}}}\n", names.join(", ")));
    }
    out
}

pub fn reduction_doc(
    src: &Catalog,
    tgt: &Catalog,
    map: &ReductionMap,
    style: Style,
) -> Result<String> {
    if style == Style::Json {
        return Ok(serde_json::to_string_pretty(&uvw_core::io::reduction_map_to_json(
            src, tgt, map,
        ))? + "\n");
    }
    let mut out = format!("reduction {} -> {}\n", map.src_name, map.tgt_name);
    for (i, img) in map.images.iter().enumerate() {
        let rhs = match img {
            VarTarget::Zero => "0".to_string(),
            VarTarget::One => "1".to_string(),
            VarTarget::Variable(j) => format!("u[{}]", tgt.objects[*j].label),
            VarTarget::Monomial(exps) => exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(j, &e)| {
                    if e == 1 {
                        format!("u[{}]", tgt.objects[j].label)
                    } else {
                        format!("u[{}]^{}", tgt.objects[j].label, e)
                    }
                })
                .collect::<Vec<_>>()
                .join("*"),
        };
        out.push_str(&format!("u[{}] -> {}\n", src.objects[i].label, rhs));
    }
    Ok(out)
}

pub fn quotient_map_doc(
    src: &Catalog,
    tgt: &Catalog,
    mults: &[Vec<i64>],
    style: Style,
) -> Result<String> {
    if style == Style::Json {
        let images: serde_json::Map<String, serde_json::Value> = (0..tgt.len())
            .map(|m| {
                let factors: Vec<serde_json::Value> = (0..src.len())
                    .filter(|&n| mults[n][m] != 0)
                    .map(|n| json!({ "var": src.objects[n].label, "power": mults[n][m] }))
                    .collect();
                (tgt.objects[m].label.clone(), json!(factors))
            })
            .collect();
        return Ok(serde_json::to_string_pretty(&json!({
            "source": src.name,
            "target": tgt.name,
            "images": images,
        }))? + "\n");
    }
    let mut out = format!("quotient map {} -> {}\n", src.name, tgt.name);
    for m in 0..tgt.len() {
        let factors: Vec<String> = (0..src.len())
            .filter(|&n| mults[n][m] != 0)
            .map(|n| {
                if mults[n][m] == 1 {
                    format!("u[{}]", src.objects[n].label)
                } else {
                    format!("u[{}]^{}", src.objects[n].label, mults[n][m])
                }
            })
            .collect();
        let rhs = if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        };
        out.push_str(&format!("u[{}] -> {}\n", tgt.objects[m].label, rhs));
    }
    Ok(out)
}
