use std::fmt::Write as _;
use std::fs;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::json;

use super::{Cli, CliError, Command, Format, Output};
use gengraph::constructions::{
    complete_product, h_membership, nilpotent_hamiltonian, product_coordinates,
    product_dominating_set, NilpotentHamilton,
};
use gengraph::gengraph::{degree_census, delta_graph, generating_graph, GeneratingGraph};
use gengraph::graphcore::{
    hamiltonian, td_bounds, total_domination, verify_certificate, Certificate, DominationOutcome,
    Graph, GraphJson, HamiltonOutcome, MultipartiteParams, SearchBudget,
};
use gengraph::groupkit::{
    build_group_with_guard, is_nilpotent, nilpotent_structure, parse_spec, quotient_mod_frattini,
    Group, NilpotentStructure,
};
use gengraph::verifier::{
    default_catalog, parse_catalog, run_catalog, scan_question, CatalogEntry, CheckId, CheckResult,
    Report,
};

type Result<T> = std::result::Result<T, CliError>;

struct Ctx {
    max_order: usize,
    budget: SearchBudget,
    header: bool,
}

impl Ctx {
    fn build(&self, spec: &str) -> Result<Group> {
        let parsed = parse_spec(spec)?;
        Ok(build_group_with_guard(&parsed, self.max_order)?)
    }

    fn emit(&self, out: &Output, body: &str) -> Result<()> {
        let mut text = String::new();
        if self.header && out.format == Format::Table {
            let secs = SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_secs());
            let _ = writeln!(text, "# gengraph {} at {secs}", env!("CARGO_PKG_VERSION"));
        }
        text.push_str(body);
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &out.output {
            Some(path) => fs::write(path, text)?,
            None => print!("{text}"),
        }
        Ok(())
    }
}

fn json_text<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serialisable")
}

fn unsupported(format: Format, command: &str) -> CliError {
    CliError::Input(format!("format {format:?} is not available for {command}").to_lowercase())
}

pub fn dispatch(cli: &Cli) -> Result<i32> {
    let ctx = Ctx {
        max_order: usize::try_from(cli.max_order).unwrap_or(usize::MAX),
        budget: SearchBudget::new(cli.budget),
        header: !cli.no_header,
    };
    match &cli.command {
        Command::Info { spec, out } => info(&ctx, spec, out),
        Command::Graph {
            spec, delta, out, ..
        } => graph(&ctx, spec, *delta, out),
        Command::Stats { spec, out } => stats(&ctx, spec, out),
        Command::Verify {
            specs,
            checks,
            catalog,
            jobs,
            out,
        } => verify(&ctx, specs, checks, catalog.as_deref(), *jobs, out),
        Command::Scan {
            question,
            groups,
            specs,
            out,
        } => {
            let mut all = specs.clone();
            if let Some(path) = groups {
                let text = fs::read_to_string(path)?;
                all.extend(
                    text.lines()
                        .map(str::trim)
                        .filter(|l| !l.is_empty() && !l.starts_with('#'))
                        .map(String::from),
                );
            }
            let results = all
                .iter()
                .map(|s| match ctx.build(s) {
                    Ok(g) => scan_question(&g, s, *question, ctx.budget),
                    Err(CliError::Input(e) | CliError::Budget(e)) => {
                        CheckResult::new_skipped(s, question.as_str(), e)
                    }
                })
                .collect();
            let report = Report::new(all, results);
            emit_report(&ctx, &report, out)?;
            Ok(report.exit_code())
        }
        Command::Tdn { parts, out } => tdn(&ctx, parts, out),
        Command::Hamcycle { spec, out } => hamcycle(&ctx, spec, out),
        Command::CheckCert {
            cert,
            graph,
            spec,
            delta,
        } => {
            let cert: Certificate = serde_json::from_str(&fs::read_to_string(cert)?)?;
            let g = match (graph, spec) {
                (Some(path), _) => {
                    let json: GraphJson = serde_json::from_str(&fs::read_to_string(path)?)?;
                    Graph::from_json(&json)?
                }
                (None, Some(spec)) => realise(&ctx.build(spec)?, *delta).graph,
                (None, None) => return Err(CliError::Input("give --graph or --spec".into())),
            };
            let valid = verify_certificate(&g, &cert);
            println!("{}", if valid { "valid" } else { "invalid" });
            Ok(if valid { 0 } else { 1 })
        }
    }
}

fn realise(g: &Group, delta: bool) -> GeneratingGraph {
    let gamma = generating_graph(g);
    if delta {
        delta_graph(&gamma)
    } else {
        gamma
    }
}

#[derive(Serialize)]
struct Info {
    spec: String,
    order: usize,
    abelian: bool,
    cyclic: bool,
    nilpotent: bool,
    two_generated: bool,
    frattini_order: Option<usize>,
    structure: Option<NilpotentStructure>,
}

fn info(ctx: &Ctx, spec: &str, out: &Output) -> Result<i32> {
    let g = ctx.build(spec)?;
    let structure = nilpotent_structure(&g).ok();
    let info = Info {
        spec: parse_spec(spec)?.to_string(),
        order: g.order(),
        abelian: g.is_abelian(),
        cyclic: g.is_cyclic(),
        nilpotent: is_nilpotent(&g),
        two_generated: g.is_two_generated(),
        frattini_order: quotient_mod_frattini(&g)
            .ok()
            .map(|q| q.frattini_elements.len()),
        structure,
    };
    let body = match out.format {
        Format::Json => json_text(&info),
        Format::Table => {
            let yes = |b: bool| if b { "yes" } else { "no" };
            let mut t = String::new();
            let _ = writeln!(t, "group          {}", info.spec);
            let _ = writeln!(t, "order          {}", info.order);
            let _ = writeln!(t, "abelian        {}", yes(info.abelian));
            let _ = writeln!(t, "cyclic         {}", yes(info.cyclic));
            let _ = writeln!(t, "nilpotent      {}", yes(info.nilpotent));
            let _ = writeln!(t, "2-generated    {}", yes(info.two_generated));
            if let Some(f) = info.frattini_order {
                let _ = writeln!(t, "|Φ|            {f}");
            }
            if let Some(st) = &info.structure {
                let sylow = |v: &[(u64, u32)]| {
                    v.iter()
                        .map(|(p, a)| format!("{p}^{a}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                let _ = writeln!(t, "r              {}", st.r());
                let _ = writeln!(t, "s              {}", st.s());
                let _ = writeln!(t, "cyclic Sylow   {}", sylow(&st.cyclic_sylow));
                let _ = writeln!(t, "noncyclic      {}", sylow(&st.noncyclic_sylow));
            }
            t
        }
        f => return Err(unsupported(f, "info")),
    };
    ctx.emit(out, &body)?;
    Ok(0)
}

fn graph(ctx: &Ctx, spec: &str, delta: bool, out: &Output) -> Result<i32> {
    let g = ctx.build(spec)?;
    let gg = realise(&g, delta);
    let labels = gg.labels(&g);
    let body = match out.format {
        Format::Dot => gg.graph.to_dot(Some(&labels)),
        Format::Json => json_text(&gg.graph.to_json(Some(&labels))),
        Format::Table => {
            let mut t = format!(
                "{} vertices, {} edges\n",
                gg.vertex_count(),
                gg.graph.edge_count()
            );
            for (u, v) in gg.graph.edges() {
                let _ = writeln!(t, "{} -- {}", labels[u], labels[v]);
            }
            t
        }
        Format::Csv => {
            let mut t = String::from("u,v\n");
            for (u, v) in gg.graph.edges() {
                let _ = writeln!(t, "{},{}", csv_field(&labels[u]), csv_field(&labels[v]));
            }
            t
        }
    };
    ctx.emit(out, &body)?;
    Ok(0)
}

fn stats(ctx: &Ctx, spec: &str, out: &Output) -> Result<i32> {
    let g = ctx.build(spec)?;
    let gamma = generating_graph(&g);
    let profile = degree_census(&g, &gamma)?;
    let bad = profile.mismatches();
    let body = match out.format {
        Format::Json => json_text(&json!({"profile": profile, "mismatches": bad})),
        Format::Table => {
            let mut t = String::new();
            let _ = writeln!(t, "|Φ|        {}", profile.frattini_order);
            let _ = writeln!(
                t,
                "P(2)       observed {}  formula {}",
                profile.gen_probability_observed, profile.gen_probability_formula
            );
            let _ = writeln!(
                t,
                "|V(Δ)|     observed {}  formula {}",
                profile.nonisolated_observed, profile.nonisolated_formula
            );
            let min = profile
                .min_degree_observed
                .map_or("-".into(), |d| d.to_string());
            let _ = writeln!(
                t,
                "δ(Δ)       observed {min}  formula {}",
                profile.min_degree_formula
            );
            let _ = writeln!(t, "\nI          coset order  count  α      degrees  β");
            for c in &profile.classes {
                let subset = format!("{:?}", c.subset);
                let degrees = format!("{:?}", c.observed_degrees);
                let _ = writeln!(
                    t,
                    "{subset:<10} {:<12} {:<6} {:<6} {degrees:<8} {}",
                    c.coset_order,
                    c.observed_count,
                    c.alpha.to_string(),
                    c.beta
                );
            }
            for m in &bad {
                let _ = writeln!(t, "MISMATCH {m}");
            }
            t
        }
        f => return Err(unsupported(f, "stats")),
    };
    ctx.emit(out, &body)?;
    Ok(if bad.is_empty() { 0 } else { 1 })
}

fn verify(
    ctx: &Ctx,
    specs: &[String],
    checks: &[String],
    catalog: Option<&str>,
    jobs: usize,
    out: &Output,
) -> Result<i32> {
    let checks: Vec<CheckId> = if checks.is_empty() {
        CheckId::ALL.to_vec()
    } else {
        checks
            .iter()
            .map(|c| c.parse().map_err(CliError::Input))
            .collect::<Result<_>>()?
    };
    let entries: Vec<CatalogEntry> = match (specs.is_empty(), catalog) {
        (false, None) => parse_catalog(&specs.join("\n"), ctx.max_order),
        (false, Some(_)) => return Err(CliError::Input("give either groups or --catalog".into())),
        (true, None | Some("default")) => default_catalog(),
        (true, Some(path)) => parse_catalog(&fs::read_to_string(path)?, ctx.max_order),
    };
    let report = run_catalog(&entries, &checks, jobs, ctx.budget);
    emit_report(ctx, &report, out)?;
    Ok(report.exit_code())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn emit_report(ctx: &Ctx, report: &Report, out: &Output) -> Result<()> {
    let body = match out.format {
        Format::Json => report.to_json(),
        Format::Table => report.to_table(),
        Format::Csv => {
            let mut t = String::from("group,check,status,reason,expected,observed,nodes\n");
            for r in &report.results {
                let fields = [
                    r.group.clone(),
                    r.check.clone(),
                    r.status.to_string(),
                    r.reason.clone().unwrap_or_default(),
                    r.expected.to_string(),
                    r.observed.to_string(),
                    r.nodes.to_string(),
                ];
                let line: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
                let _ = writeln!(t, "{}", line.join(","));
            }
            t
        }
        f => return Err(unsupported(f, "reports")),
    };
    ctx.emit(out, &body)
}

fn tdn(ctx: &Ctx, parts: &[usize], out: &Output) -> Result<i32> {
    let params = MultipartiteParams::new(parts.to_vec())?;
    let bounds = td_bounds(&params)?;
    let graph = complete_product(&params);
    let searched = total_domination(&graph, ctx.budget)?;
    let diagonal = product_dominating_set(&params).is_ok();
    let coords = |set: &[usize]| -> Vec<Vec<usize>> {
        set.iter()
            .map(|&v| product_coordinates(params.parts(), v))
            .collect()
    };
    let (exact, witness, code) = match &searched.outcome {
        DominationOutcome::Found { gamma, set } => (Some(*gamma), coords(set), 0),
        DominationOutcome::BudgetExceeded { best, .. } => (None, coords(best), 3),
    };
    let body = match out.format {
        Format::Json => json_text(&json!({
            "parts": params.parts(),
            "lower": bounds.lower,
            "upper": bounds.upper,
            "t": bounds.t,
            "exact": exact,
            "witness": witness,
            "diagonal_applies": diagonal,
            "nodes": searched.nodes,
        })),
        Format::Table => {
            let mut t = String::new();
            let _ = writeln!(t, "parts    {:?}", params.parts());
            let _ = writeln!(t, "lower    {}", bounds.lower);
            let _ = writeln!(t, "upper    {} (t = {})", bounds.upper, bounds.t);
            match exact {
                Some(v) => {
                    let _ = writeln!(t, "exact    {v} (search, {} nodes)", searched.nodes);
                }
                None => {
                    let _ = writeln!(
                        t,
                        "exact    unknown: budget exhausted after {} nodes",
                        searched.nodes
                    );
                }
            }
            let _ = writeln!(t, "witness  {witness:?}");
            t
        }
        f => return Err(unsupported(f, "tdn")),
    };
    ctx.emit(out, &body)?;
    Ok(code)
}

fn hamcycle(ctx: &Ctx, spec: &str, out: &Output) -> Result<i32> {
    let g = ctx.build(spec)?;
    let delta = delta_graph(&generating_graph(&g));
    let (vertices, method) = if is_nilpotent(&g) && g.is_two_generated() {
        match nilpotent_hamiltonian(&g, ctx.budget)? {
            NilpotentHamilton::Yes(c) => (Some(c.vertices), format!("{:?}", c.method)),
            NilpotentHamilton::No { reason } => (None, reason),
            NilpotentHamilton::BudgetExceeded { nodes } => {
                return Err(CliError::Budget(format!(
                    "Hamiltonian search stopped after {nodes} nodes"
                )))
            }
        }
    } else {
        let found = hamiltonian(&delta.graph, ctx.budget);
        match found.outcome {
            HamiltonOutcome::Yes { cycle, .. } => (Some(cycle), "Search".to_string()),
            HamiltonOutcome::No { reason } => (None, reason),
            HamiltonOutcome::BudgetExceeded => {
                return Err(CliError::Budget(format!(
                    "Hamiltonian search stopped after {} nodes",
                    found.nodes
                )))
            }
        }
    };
    let labels = delta.labels(&g);
    let chords = match &vertices {
        Some(c) => h_membership(&delta.graph, c)?,
        None => None,
    };
    let body = match out.format {
        Format::Json => json_text(&json!({
            "hamiltonian": vertices.is_some(),
            "method": method,
            "labels": vertices.as_ref().map(|c| c.iter().map(|&v| labels[v].clone()).collect::<Vec<_>>()),
            "certificate": vertices.as_ref().map(|c| Certificate::HamCycle { cycle: c.clone() }),
            "chords": chords,
        })),
        Format::Table => match &vertices {
            Some(c) => {
                let mut t = format!(
                    "Hamiltonian cycle of Δ({spec}), {} vertices, by {method}\n",
                    c.len()
                );
                let names: Vec<&str> = c.iter().map(|&v| labels[v].as_str()).collect();
                let _ = writeln!(t, "{}", names.join(" "));
                if let Some(Certificate::HChords {
                    chords: Some(((a, b), (x, y))),
                    ..
                }) = &chords
                {
                    let _ = writeln!(
                        t,
                        "chords   {{{a}, {b}}} and {{{x}, {y}}} (cycle positions)"
                    );
                }
                t
            }
            None => format!("no Hamiltonian cycle: {method}\n"),
        },
        f => return Err(unsupported(f, "hamcycle")),
    };
    ctx.emit(out, &body)?;
    Ok(0)
}
