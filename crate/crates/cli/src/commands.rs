//! One function per subcommand, each returning a rendered [`Output`].

use cominuscule::catalog::{catalog_up_to_rank, check_table1, make_spec, GrassmannianSpec, SpaceFamily};
use cominuscule::foliations::{cayley_family, orthogonal_family, rect_family, scan, symplectic_family, FamilyKind, FoliationFamilyReport};
use cominuscule::partitions::{agreement_sweep, FormulaFamily};
use cominuscule::plethysm::{big_as_number, decompose_omega, default_method, DecompositionReport, Method};
use cominuscule::twists::{min_twist, min_twists, nonvanishing_scan, table_audit, Verdict};
use cominuscule::{BigUint, Exec, LieType, RootSystem, Weight};
use serde::Serialize;

use crate::args::{CatalogCmd, Exceptional, FoliationCmd, FormulaFamilyArg, OmegaCmd, PartitionsCmd, RootsysCmd};
use crate::output::{coords, Output};
use crate::space::parse_space;
use crate::CliError;

fn spec_of(text: &str) -> Result<GrassmannianSpec, CliError> {
    parse_space(text).map_err(|e| CliError::Usage(format!("--space {text:?}: {e}")))
}

#[derive(Serialize)]
struct CatalogEntry {
    space: String,
    lie_type: String,
    marked_node: usize,
    dim: usize,
    index_c1: i64,
    cotangent_weight: Weight,
}

fn entry(spec: &GrassmannianSpec) -> CatalogEntry {
    CatalogEntry {
        space: spec.name(),
        lie_type: spec.ambient().lie_type().map(|t| t.to_string()).unwrap_or_default(),
        marked_node: spec.marked_node() + 1,
        dim: spec.dim(),
        index_c1: spec.index_c1(),
        cotangent_weight: spec.cotangent_weight().clone(),
    }
}

const CATALOG_HEADER: [&str; 6] = ["space", "lie_type", "marked_node", "dim", "index_c1", "cotangent_weight"];

fn entry_row(e: &CatalogEntry) -> Vec<String> {
    vec![
        e.space.clone(),
        e.lie_type.clone(),
        e.marked_node.to_string(),
        e.dim.to_string(),
        e.index_c1.to_string(),
        coords(&e.cotangent_weight),
    ]
}

pub fn catalog(cmd: &CatalogCmd) -> Result<Output, CliError> {
    match cmd {
        CatalogCmd::List { max_rank } => {
            let entries = catalog_up_to_rank(*max_rank)
                .into_iter()
                .map(|f| make_spec(f).map(|s| entry(&s)))
                .collect::<Result<Vec<_>, _>>()?;
            let rows = entries.iter().map(entry_row).collect();
            Ok(Output::new(&entries, CATALOG_HEADER.to_vec(), rows, true))
        }
        CatalogCmd::Show { space } => {
            let spec = spec_of(space)?;
            #[derive(Serialize)]
            struct Show {
                #[serde(flatten)]
                entry: CatalogEntry,
                levi_nodes: Vec<usize>,
                nilradical: Vec<Vec<i64>>,
                table1: cominuscule::catalog::Table1Record,
            }
            let rec = check_table1(&spec);
            let ok = rec.matches;
            let show = Show {
                entry: entry(&spec),
                levi_nodes: spec.levi().nodes().iter().map(|i| i + 1).collect(),
                nilradical: spec.nilradical().iter().map(|r| r.simple.clone()).collect(),
                table1: rec,
            };
            let mut row = entry_row(&show.entry);
            row.push(ok.to_string());
            let mut header = CATALOG_HEADER.to_vec();
            header.push("table1_match");
            Ok(Output::new(&show, header, vec![row], ok))
        }
    }
}

pub fn rootsys(cmd: &RootsysCmd) -> Result<Output, CliError> {
    let RootsysCmd::Dump { lie_type } = cmd;
    let t: LieType = lie_type
        .parse()
        .map_err(|e| CliError::Usage(format!("--type {lie_type:?}: {e}")))?;
    let rs = RootSystem::new(t);
    #[derive(Serialize)]
    struct Root {
        simple: Vec<i64>,
        weight: Weight,
        height: i64,
    }
    #[derive(Serialize)]
    struct Dump {
        lie_type: String,
        rank: usize,
        cartan: Vec<Vec<i64>>,
        simple_root_norms: Vec<i64>,
        inverse_cartan: Vec<Vec<String>>,
        weyl_group_order: String,
        highest_root: Option<Vec<i64>>,
        positive_roots: Vec<Root>,
    }
    let roots: Vec<Root> = rs
        .positive_roots()
        .iter()
        .map(|r| Root {
            simple: r.simple.clone(),
            weight: r.weight.clone(),
            height: r.height(),
        })
        .collect();
    let rows = roots
        .iter()
        .map(|r| {
            vec![
                r.height.to_string(),
                r.simple.iter().map(i64::to_string).collect::<Vec<_>>().join(" "),
                coords(&r.weight),
            ]
        })
        .collect();
    let dump = Dump {
        lie_type: t.to_string(),
        rank: rs.rank(),
        cartan: rs.cartan().to_vec(),
        simple_root_norms: rs.simple_root_norms().to_vec(),
        inverse_cartan: rs
            .inverse_cartan()
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect())
            .collect(),
        weyl_group_order: rs.weyl_group_order().to_string(),
        highest_root: rs.highest_root().map(|r| r.simple.clone()),
        positive_roots: roots,
    };
    Ok(Output::new(&dump, vec!["height", "simple_coords", "weight"], rows, true))
}

pub fn partitions(cmd: &PartitionsCmd, exec: Exec) -> Result<Output, CliError> {
    let PartitionsCmd::Verify { family, max_rank } = cmd;
    let (fam, max_n) = match family {
        FormulaFamilyArg::A => (FormulaFamily::A, max_rank + 1),
        FormulaFamilyArg::C => (FormulaFamily::C, *max_rank),
        FormulaFamilyArg::D => (FormulaFamily::D, *max_rank),
    };
    let rows = agreement_sweep(fam, max_n, exec)?;
    let ok = rows.iter().all(|r| r.agrees());
    let csv = rows
        .iter()
        .map(|r| {
            vec![
                format!("{:?}", r.family),
                r.k.map(|k| k.to_string()).unwrap_or_default(),
                r.n.to_string(),
                r.p.to_string(),
                r.formula_l.to_string(),
                r.oracle_l.to_string(),
                r.agrees().to_string(),
            ]
        })
        .collect();
    Ok(Output::new(&rows, vec!["family", "k", "n", "p", "formula_l", "oracle_l", "agrees"], csv, ok))
}

#[derive(Serialize)]
pub struct SummandView {
    pub weight: Vec<i64>,
    #[serde(serialize_with = "big_as_number")]
    pub levi_dim: BigUint,
    pub twist: i64,
}

#[derive(Serialize)]
pub struct RankView {
    #[serde(serialize_with = "big_as_number")]
    pub expected: BigUint,
    #[serde(serialize_with = "big_as_number")]
    pub got: BigUint,
}

#[derive(Serialize)]
pub struct DecompositionView {
    pub space: String,
    pub p: usize,
    pub method: Method,
    pub summands: Vec<SummandView>,
    pub rank_check: RankView,
}

pub fn decomposition_view(spec: &GrassmannianSpec, r: &DecompositionReport) -> DecompositionView {
    DecompositionView {
        space: spec.name(),
        p: r.p,
        method: r.method,
        summands: r
            .summands
            .iter()
            .map(|s| SummandView {
                weight: s.highest_weight.coords().to_vec(),
                levi_dim: s.levi_dim.clone(),
                twist: s.twist(spec),
            })
            .collect(),
        rank_check: RankView {
            expected: r.rank_check.expected.clone(),
            got: r.rank_check.got.clone(),
        },
    }
}

pub fn omega(cmd: &OmegaCmd) -> Result<Output, CliError> {
    let OmegaCmd::Decompose { space, p, force_plethysm } = cmd;
    let spec = spec_of(space)?;
    let method = if *force_plethysm { Method::WeightDP } else { default_method(spec.family()) };
    let report = decompose_omega(&spec, *p, method)?;
    let ok = report.rank_check.holds() && report.summands.iter().all(|s| s.lemma_consistent(&spec));
    let view = decomposition_view(&spec, &report);
    let rows = view
        .summands
        .iter()
        .map(|s| {
            vec![
                view.space.clone(),
                view.p.to_string(),
                format!("{:?}", view.method),
                s.weight.iter().map(i64::to_string).collect::<Vec<_>>().join(" "),
                s.levi_dim.to_string(),
                s.twist.to_string(),
            ]
        })
        .collect();
    Ok(Output::new(&view, vec!["space", "p", "method", "weight", "levi_dim", "twist"], rows, ok))
}

pub fn min_twist_cmd(space: &str, p: Option<usize>, force: bool, exec: Exec) -> Result<Output, CliError> {
    let spec = spec_of(space)?;
    let reports = match p {
        Some(p) => vec![min_twist(&spec, p, force)?],
        None => min_twists(&spec, force, exec)?,
    };
    let ok = reports.iter().all(|r| r.closed_form.is_none_or(|c| c == r.l));
    let rows = reports
        .iter()
        .map(|r| vec![spec.name(), r.p.to_string(), r.l.to_string(), r.d.to_string(), r.h0_dim.to_string()])
        .collect();
    let out = if p.is_some() {
        Output::new(&reports[0], vec!["space", "p", "l", "d", "h0_dim"], rows, ok)
    } else {
        Output::new(&reports, vec!["space", "p", "l", "d", "h0_dim"], rows, ok)
    };
    Ok(out)
}

pub fn table_audit_cmd(which: Exceptional, max_p: Option<usize>, exec: Exec) -> Result<Output, CliError> {
    let fam = match which {
        Exceptional::E6 => SpaceFamily::Cayley,
        Exceptional::E7 => SpaceFamily::Freudenthal,
    };
    let audit = table_audit(fam, max_p, exec)?;
    let mut rows = Vec::new();
    for r in &audit.rows {
        for c in &r.cells {
            rows.push(vec![
                r.p.to_string(),
                c.i.to_string(),
                c.transcribed.pretty(),
                c.found.to_string(),
                r.l_transcribed.to_string(),
                r.l_computed.to_string(),
                r.matches.to_string(),
            ]);
        }
        for w in &r.unmatched_computed {
            rows.push(vec![
                r.p.to_string(),
                String::new(),
                format!("computed {}", w.pretty()),
                "false".into(),
                r.l_transcribed.to_string(),
                r.l_computed.to_string(),
                r.matches.to_string(),
            ]);
        }
    }
    #[derive(Serialize)]
    struct View<'a> {
        all_match: bool,
        #[serde(flatten)]
        audit: &'a cominuscule::twists::TableAudit,
    }
    let ok = audit.all_match();
    let view = View {
        all_match: ok,
        audit: &audit,
    };
    Ok(Output::new(
        &view,
        vec!["p", "cell", "weight", "found", "l_transcribed", "l_computed", "row_match"],
        rows,
        ok,
    ))
}

pub fn nonvanishing(max_rank: usize, exec: Exec) -> Result<Output, CliError> {
    let rows = nonvanishing_scan(max_rank, exec)?;
    let ok = rows.iter().all(|r| r.verdict != Verdict::Violation);
    #[derive(Serialize)]
    struct Row {
        space: String,
        p: usize,
        l: i64,
        sections_at_2: bool,
        sections_at_3: bool,
        verdict: Verdict,
    }
    let view: Vec<Row> = rows
        .iter()
        .map(|r| Row {
            space: r.space.name(),
            p: r.p,
            l: r.l,
            sections_at_2: r.sections_at_2,
            sections_at_3: r.sections_at_3,
            verdict: r.verdict,
        })
        .collect();
    let csv = view
        .iter()
        .map(|r| {
            vec![
                r.space.clone(),
                r.p.to_string(),
                r.l.to_string(),
                r.sections_at_2.to_string(),
                r.sections_at_3.to_string(),
                format!("{:?}", r.verdict),
            ]
        })
        .collect();
    Ok(Output::new(&view, vec!["space", "p", "l", "sections_at_2", "sections_at_3", "verdict"], csv, ok))
}

fn kind_label(k: &FamilyKind) -> String {
    match k {
        FamilyKind::RectFlag { d, e, h } => format!("RectFlag(d={d},e={e},h={h})"),
        FamilyKind::AraujoDruel { m } => format!("AraujoDruel(m={m})"),
        FamilyKind::SymplecticProj { a } => format!("SymplecticProj(a={a})"),
        FamilyKind::OrthogonalProj { a } => format!("OrthogonalProj(a={a})"),
        FamilyKind::CayleyLines => "CayleyLines".into(),
    }
}

fn foliation_output(reports: &[FoliationFamilyReport], single: bool) -> Output {
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.space.name(),
                r.p.to_string(),
                r.l.to_string(),
                r.degree.to_string(),
                kind_label(&r.kind),
                r.parameter_space.clone(),
                r.tf_rank.to_string(),
                r.tf_c1.to_string(),
                r.minimal.to_string(),
            ]
        })
        .collect();
    let header = vec!["space", "p", "l", "degree", "kind", "parameter_space", "tf_rank", "tf_c1", "minimal"];
    let ok = reports.iter().all(|r| r.degree == r.l - r.p as i64 - 1);
    if single {
        Output::new(&reports[0], header, rows, ok)
    } else {
        Output::new(&reports, header, rows, ok)
    }
}

pub fn foliation(cmd: &FoliationCmd, exec: Exec) -> Result<Output, CliError> {
    Ok(match cmd {
        FoliationCmd::Rect { k, n, p } => foliation_output(&rect_family(*k, *n, *p)?, false),
        FoliationCmd::Sympl { n, a } => foliation_output(&[symplectic_family(*n, *a)?], true),
        FoliationCmd::Ortho { n, a } => foliation_output(&[orthogonal_family(*n, *a)?], true),
        FoliationCmd::Cayley => foliation_output(&[cayley_family()?], true),
        FoliationCmd::Scan { max_rank } => foliation_output(&scan(*max_rank, exec)?, false),
    })
}
