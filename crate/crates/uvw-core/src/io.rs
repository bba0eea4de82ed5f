//! File formats: algebra descriptions, modules, complexes, catalogs, fans,
//! polynomials and reduction maps, plus catalog loading through
//! `UVW_CATALOG_PATH`.

use crate::algebra::{Arrow, BuildOptions, IdealGen, QuiverAlgebra, Relation, RelationTerm};
use crate::catalog::{build_catalog, Catalog, CatalogError};
use crate::fan::GFan;
use crate::linalg::RatMat;
use crate::module::ModuleRep;
use crate::poly::Poly;
use crate::rat::{format_rat, parse_rat};
use crate::reductions::{ReductionMap, VarTarget};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrowDesc {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelTermDesc {
    pub coef: String,
    pub path: Vec<String>,
}

/// Algebra description file: vertices are 1-indexed, arrows named.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraDesc {
    pub vertices: usize,
    pub arrows: Vec<ArrowDesc>,
    #[serde(default)]
    pub relations: Vec<Vec<RelTermDesc>>,
}

/// One ideal generator: an element (parallel-path combination) or a vertex
/// idempotent.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdealGenDesc {
    Vertex { vertex: usize },
    Element(Vec<RelTermDesc>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleFile {
    pub dims: Vec<usize>,
    #[serde(default)]
    pub maps: std::collections::BTreeMap<String, Vec<Vec<String>>>,
}

/// Two-term complex file: multiplicity vectors in degrees -1 and 0 plus the
/// block differential, each block a combination of paths given by arrow ids.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexFile {
    pub mult_minus1: Vec<usize>,
    pub mult_0: Vec<usize>,
    /// `diff[row][col]`: row indexes the degree-0 summands, col the degree -1
    /// summands, both expanded in vertex order
    pub diff: Vec<Vec<Vec<RelTermDesc>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogFile {
    pub name: String,
    pub algebra: AlgebraDesc,
    pub modules: Vec<LabelledModule>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabelledModule {
    pub label: String,
    pub module: ModuleFile,
}

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("bad input: {0}")]
    Bad(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

pub fn algebra_from_desc(desc: &AlgebraDesc) -> Result<QuiverAlgebra, IoError> {
    let arrows: Vec<Arrow> = desc
        .arrows
        .iter()
        .map(|a| {
            if a.src == 0 || a.tgt == 0 || a.src > desc.vertices || a.tgt > desc.vertices {
                return Err(IoError::Bad(format!("arrow {} out of range", a.id)));
            }
            Ok(Arrow {
                id: a.id.clone(),
                src: a.src - 1,
                tgt: a.tgt - 1,
            })
        })
        .collect::<Result<_, _>>()?;
    let arrow_index = |id: &str| -> Result<usize, IoError> {
        arrows
            .iter()
            .position(|a| a.id == id)
            .ok_or_else(|| IoError::Bad(format!("unknown arrow id {}", id)))
    };
    let relations: Vec<Relation> = desc
        .relations
        .iter()
        .map(|terms| {
            let terms = terms
                .iter()
                .map(|t| {
                    Ok(RelationTerm {
                        coef: parse_rat(&t.coef)
                            .ok_or_else(|| IoError::Bad(format!("bad coefficient {}", t.coef)))?,
                        path: t
                            .path
                            .iter()
                            .map(|id| arrow_index(id))
                            .collect::<Result<_, _>>()?,
                    })
                })
                .collect::<Result<Vec<_>, IoError>>()?;
            Ok(Relation { terms })
        })
        .collect::<Result<_, IoError>>()?;
    Ok(QuiverAlgebra::build(
        desc.vertices,
        arrows,
        relations,
        BuildOptions::default(),
    )?)
}

pub fn ideal_gens_from_desc(
    a: &QuiverAlgebra,
    gens: &[IdealGenDesc],
) -> Result<Vec<IdealGen>, IoError> {
    gens.iter()
        .map(|g| match g {
            IdealGenDesc::Vertex { vertex } => {
                if *vertex == 0 || *vertex > a.vertex_count() {
                    return Err(IoError::Bad(format!("vertex {} out of range", vertex)));
                }
                Ok(IdealGen::Vertex(vertex - 1))
            }
            IdealGenDesc::Element(terms) => {
                let terms = terms
                    .iter()
                    .map(|t| {
                        Ok(RelationTerm {
                            coef: parse_rat(&t.coef)
                                .ok_or_else(|| IoError::Bad(format!("bad coef {}", t.coef)))?,
                            path: t
                                .path
                                .iter()
                                .map(|id| {
                                    a.arrow_index(id).ok_or_else(|| {
                                        IoError::Bad(format!("unknown arrow {}", id))
                                    })
                                })
                                .collect::<Result<_, _>>()?,
                        })
                    })
                    .collect::<Result<Vec<_>, IoError>>()?;
                Ok(IdealGen::Element(Relation { terms }))
            }
        })
        .collect()
}

pub fn module_from_file(a: &QuiverAlgebra, f: &ModuleFile) -> Result<ModuleRep, IoError> {
    if f.dims.len() != a.vertex_count() {
        return Err(IoError::Bad("dims arity mismatch".into()));
    }
    for key in f.maps.keys() {
        if a.arrow_index(key).is_none() {
            return Err(IoError::Bad(format!("map for unknown arrow {}", key)));
        }
    }
    let mut maps = Vec::with_capacity(a.arrows().len());
    for ar in a.arrows() {
        let rows = f.dims[ar.tgt];
        let cols = f.dims[ar.src];
        let mat = match f.maps.get(&ar.id) {
            None => RatMat::zeros(rows, cols),
            Some(data) => {
                if data.len() != rows || data.iter().any(|r| r.len() != cols) {
                    return Err(IoError::Bad(format!("matrix shape for arrow {}", ar.id)));
                }
                let mut m = RatMat::zeros(rows, cols);
                for (r, row) in data.iter().enumerate() {
                    for (c, entry) in row.iter().enumerate() {
                        m.set(
                            r,
                            c,
                            parse_rat(entry)
                                .ok_or_else(|| IoError::Bad(format!("bad entry {}", entry)))?,
                        );
                    }
                }
                m
            }
        };
        maps.push(mat);
    }
    let m = ModuleRep { dims: f.dims.clone(), maps };
    m.validate(a)
        .map_err(|_| IoError::Bad("module violates the relations".into()))?;
    Ok(m)
}

pub fn module_to_file(a: &QuiverAlgebra, m: &ModuleRep) -> ModuleFile {
    let mut maps = std::collections::BTreeMap::new();
    for (ai, ar) in a.arrows().iter().enumerate() {
        let mat = &m.maps[ai];
        if mat.is_zero() {
            continue;
        }
        let data: Vec<Vec<String>> = (0..mat.rows())
            .map(|r| (0..mat.cols()).map(|c| format_rat(mat.at(r, c))).collect())
            .collect();
        maps.insert(ar.id.clone(), data);
    }
    ModuleFile {
        dims: m.dims.clone(),
        maps,
    }
}

pub fn complex_from_file(
    a: &QuiverAlgebra,
    f: &ComplexFile,
) -> Result<crate::homotopy::TwoTermComplex, IoError> {
    let n = a.vertex_count();
    if f.mult_minus1.len() != n || f.mult_0.len() != n {
        return Err(IoError::Bad("multiplicity vector arity mismatch".into()));
    }
    let expand = |mults: &[usize]| -> Vec<usize> {
        let mut out = Vec::new();
        for (v, &m) in mults.iter().enumerate() {
            for _ in 0..m {
                out.push(v);
            }
        }
        out
    };
    let s0 = expand(&f.mult_0);
    let sm1 = expand(&f.mult_minus1);
    if f.diff.len() != s0.len() || f.diff.iter().any(|r| r.len() != sm1.len()) {
        return Err(IoError::Bad("differential block shape mismatch".into()));
    }
    let mut diff = vec![vec![crate::algebra::elem_zero(); sm1.len()]; s0.len()];
    for (g, row) in f.diff.iter().enumerate() {
        for (h, terms) in row.iter().enumerate() {
            let mut elem = crate::algebra::elem_zero();
            for t in terms {
                let coef = parse_rat(&t.coef)
                    .ok_or_else(|| IoError::Bad(format!("bad coefficient {}", t.coef)))?;
                let seq: Vec<usize> = t
                    .path
                    .iter()
                    .map(|id| {
                        a.arrow_index(id)
                            .ok_or_else(|| IoError::Bad(format!("unknown arrow {}", id)))
                    })
                    .collect::<Result<_, _>>()?;
                // blocks live in e_{v_g} L e_{w_h}: paths from the degree-0
                // summand vertex to the degree -1 summand vertex
                let nf = if seq.is_empty() {
                    if s0[g] != sm1[h] {
                        return Err(IoError::Bad("trivial path between distinct vertices".into()));
                    }
                    crate::algebra::elem_basis(a.trivial_idx(s0[g]))
                } else {
                    a.path_elem(s0[g], &seq)
                };
                let mut scaled = nf;
                for (_, c) in scaled.iter_mut() {
                    *c = &*c * &coef;
                }
                crate::algebra::elem_add_scaled(&mut elem, &scaled, &crate::rat::rat(1));
            }
            diff[g][h] = elem;
        }
    }
    Ok(crate::homotopy::TwoTermComplex::from_summands(n, sm1, s0, diff))
}

pub fn complex_to_file(a: &QuiverAlgebra, x: &crate::homotopy::TwoTermComplex) -> ComplexFile {
    // the file format fixes the summand order to be vertex-sorted
    let sorted = |summands: &[usize]| -> Vec<usize> {
        let mut idx: Vec<usize> = (0..summands.len()).collect();
        idx.sort_by_key(|&i| (summands[i], i));
        idx
    };
    let ord0 = sorted(x.summands_0());
    let ord1 = sorted(x.summands_minus1());
    let diff: Vec<Vec<Vec<RelTermDesc>>> = ord0
        .iter()
        .map(|&g| {
            ord1.iter()
                .map(|&h| {
                    x.diff_block(g, h)
                        .iter()
                        .map(|(idx, coef)| {
                            let b = &a.basis_paths()[*idx];
                            RelTermDesc {
                                coef: format_rat(coef),
                                path: b.seq.iter().map(|&ai| a.arrows()[ai].id.clone()).collect(),
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    ComplexFile {
        mult_minus1: x.mult_minus1(),
        mult_0: x.mult_0(),
        diff,
    }
}

pub fn catalog_from_file(f: &CatalogFile) -> Result<Catalog, IoError> {
    let algebra = algebra_from_desc(&f.algebra)?;
    let modules: Vec<(String, ModuleRep)> = f
        .modules
        .iter()
        .map(|lm| Ok((lm.label.clone(), module_from_file(&algebra, &lm.module)?)))
        .collect::<Result<_, IoError>>()?;
    Ok(build_catalog(&f.name, algebra, modules)?)
}

/// Load a catalog: built-in names first, then `{name}.json` in the
/// UVW_CATALOG_PATH directories.
pub fn load_catalog_anywhere(name: &str) -> Result<Catalog, IoError> {
    match crate::builtins::load_catalog(name) {
        Ok(cat) => return Ok(cat),
        Err(CatalogError::UnknownCatalog(_)) => {}
        Err(e) => return Err(e.into()),
    }
    if let Ok(paths) = std::env::var("UVW_CATALOG_PATH") {
        for dir in std::env::split_paths(&paths) {
            let candidate = dir.join(format!("{}.json", name));
            if candidate.exists() {
                let text = std::fs::read_to_string(&candidate)?;
                let file: CatalogFile = serde_json::from_str(&text)?;
                return catalog_from_file(&file);
            }
        }
    }
    Err(CatalogError::UnknownCatalog(name.to_string()).into())
}

/// JSON form of a polynomial: {"vars": [...], "terms": [{"exp": [...],
/// "coef": ...}]} with coefficients as numbers when they fit.
pub fn poly_to_json(p: &Poly, vars: &[String]) -> serde_json::Value {
    use serde_json::json;
    let terms: Vec<serde_json::Value> = p
        .terms()
        .map(|(e, c)| {
            let coef: serde_json::Value = match i64::try_from(c.clone()) {
                Ok(v) => json!(v),
                Err(_) => json!(c.to_string()),
            };
            json!({ "exp": e, "coef": coef })
        })
        .collect();
    json!({ "vars": vars, "terms": terms })
}

pub fn fan_to_json(cat: &Catalog, fan: &GFan) -> serde_json::Value {
    use serde_json::json;
    let rays: Vec<serde_json::Value> = fan
        .rays
        .iter()
        .map(|(obj, g)| json!({ "object": cat.objects[*obj].label, "g": g }))
        .collect();
    let cones: Vec<Vec<String>> = fan
        .max_cones
        .iter()
        .map(|cone| {
            cone.iter()
                .map(|&r| cat.objects[fan.rays[r].0].label.clone())
                .collect()
        })
        .collect();
    json!({ "rays": rays, "cones": cones })
}

/// polymake-style text block for external polyhedral tools.
pub fn fan_to_polymake(fan: &GFan) -> String {
    let mut out = String::from("RAYS\n");
    for (_, g) in &fan.rays {
        out.push_str(
            &g.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push('\n');
    }
    out.push_str("\nMAXIMAL_CONES\n");
    for cone in &fan.max_cones {
        out.push_str(&format!(
            "{{{}}}\n",
            cone.iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        ));
    }
    out
}

pub fn reduction_map_to_json(
    src: &Catalog,
    tgt: &Catalog,
    map: &ReductionMap,
) -> serde_json::Value {
    use serde_json::json;
    let images: serde_json::Map<String, serde_json::Value> = map
        .images
        .iter()
        .enumerate()
        .map(|(i, img)| {
            let value = match img {
                VarTarget::Zero => json!(0),
                VarTarget::One => json!(1),
                VarTarget::Variable(j) => json!(tgt.objects[*j].label),
                VarTarget::Monomial(exps) => {
                    let factors: Vec<serde_json::Value> = exps
                        .iter()
                        .enumerate()
                        .filter(|(_, &e)| e != 0)
                        .map(|(j, &e)| json!({ "var": tgt.objects[j].label, "power": e }))
                        .collect();
                    json!(factors)
                }
            };
            (src.objects[i].label.clone(), value)
        })
        .collect();
    json!({
        "source": map.src_name,
        "target": map.tgt_name,
        "focus": map.focus.map(|f| src.objects[f].label.clone()),
        "images": images,
    })
}

/// Stable FNV-1a hash of the catalog's defining data, for report headers.
pub fn catalog_hash(cat: &Catalog) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    let mut eat = |bytes: &[u8]| {
        for &b in bytes {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    for o in &cat.objects {
        eat(o.label.as_bytes());
        for &g in &o.g {
            eat(&g.to_le_bytes());
        }
        for &d in &o.d {
            eat(&d.to_le_bytes());
        }
    }
    for row in &cat.hom_shift {
        for &v in row {
            eat(&(v as u64).to_le_bytes());
        }
    }
    h
}
