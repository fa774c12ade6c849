//! Command-line front end: inspect metacyclic presentations, print subgroup
//! lattices, decide the solitary-density property, and run the
//! classifier-vs-brute-force sweep.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sollat::{
    all_subgroups_with_cap, density_from_parts, is_normal, solitary_flags, verify_classification,
    FiniteGroup, Subgroup, SubgroupLattice, ZmError, ZmParams, DEFAULT_ORDER_CAP,
};

#[derive(Parser)]
#[command(
    name = "sollat",
    version,
    about = "Subgroup lattices, solitary subgroups, and density checks for finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format (`dot` is only available for `lattice`).
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest group order the tool will build.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    cap: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a presentation ZM(m, n, r) and summarize the group.
    ZmInfo { m: u64, n: u64, r: u64 },
    /// Print the subgroup lattice of a group.
    ///
    /// GROUP is one of `zm:M,N,R`, `cyclic:N`, `dihedral:N` (order 2N),
    /// or `quaternion:K` (order 2^K).
    Lattice { group: String },
    /// Decide whether the solitary subgroups of a group are dense.
    ///
    /// Exits 0 when they are, 1 when they are not.
    Density { group: String },
    /// Check the density classifier against brute force on every valid
    /// presentation up to a bound. Exits 1 on any disagreement.
    Verify {
        /// Largest group order to sweep.
        #[arg(long, default_value_t = 400)]
        max_order: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    if cli.format == Format::Dot && !matches!(cli.command, Command::Lattice { .. }) {
        return Err("dot output is only available for the lattice command".into());
    }
    match cli.command {
        Command::ZmInfo { m, n, r } => zm_info(m, n, r, cli.format, cli.cap),
        Command::Lattice { group } => lattice_cmd(&group, cli.format, cli.cap),
        Command::Density { group } => density_cmd(&group, cli.format, cli.cap),
        Command::Verify { max_order } => verify_cmd(max_order, cli.format, cli.cap),
    }
}

/// Stable machine-readable tag for each presentation error.
fn error_kind(e: &ZmError) -> &'static str {
    match e {
        ZmError::ParameterRange { .. } => "parameter-range",
        ZmError::AbelianParameters => "abelian-parameters",
        ZmError::GcdViolation { .. } => "gcd-violation",
        ZmError::OrderViolation { .. } => "order-violation",
        ZmError::OrderCapExceeded { .. } => "order-cap-exceeded",
        ZmError::ElementRange { .. } => "element-range",
        ZmError::NotInTripleSet { .. } => "not-in-triple-set",
    }
}

fn zm_info(m: u64, n: u64, r: u64, format: Format, cap: usize) -> Result<u8, String> {
    let params = match ZmParams::new(m, n, r) {
        Ok(p) => p,
        Err(e) => {
            match format {
                Format::Json => {
                    let doc = json!({
                        "error": { "kind": error_kind(&e), "message": e.to_string() },
                        "valid": false,
                    });
                    println!("{doc}");
                }
                _ => eprintln!("invalid presentation ({m}, {n}, {r}): {e}"),
            }
            return Ok(2);
        }
    };
    let g = params.group_with_cap(cap).map_err(|e| e.to_string())?;
    let lat = all_subgroups_with_cap(&g, cap).map_err(|e| e.to_string())?;
    let flags = solitary_flags(&g, &lat);
    let solitary = flags.iter().filter(|&&f| f).count();
    match format {
        Format::Json => {
            let doc = json!({
                "center": params.center_order(),
                "d": params.d(),
                "order": params.order(),
                "solitary": solitary,
                "subgroups": lat.len(),
                "valid": true,
            });
            println!("{doc}");
        }
        _ => {
            println!("{}: valid presentation", g.label());
            println!("  order:              {}", params.order());
            println!("  d (order of r mod m): {}", params.d());
            println!("  center order:       {}", params.center_order());
            println!("  subgroups:          {}", lat.len());
            println!("  solitary subgroups: {solitary}");
        }
    }
    Ok(0)
}

/// Builds the group named by a spec string, enforcing the order cap.
fn build_group(spec: &str, cap: usize) -> Result<FiniteGroup, String> {
    let usage = "expected zm:M,N,R | cyclic:N | dihedral:N | quaternion:K";
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| format!("unrecognized group spec '{spec}' ({usage})"))?;
    let numbers: Vec<u64> = rest
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("bad number '{t}' in group spec '{spec}'"))
        })
        .collect::<Result<_, _>>()?;
    let arity_err = |want: usize| format!("'{kind}:' takes {want} number(s) ({usage})");
    let group = match kind {
        "zm" => {
            if numbers.len() != 3 {
                return Err(arity_err(3));
            }
            let (m, n, r) = (numbers[0], numbers[1], numbers[2]);
            let params = ZmParams::new(m, n, r)
                .map_err(|e| format!("invalid presentation ({m}, {n}, {r}): {e}"))?;
            return params.group_with_cap(cap).map_err(|e| e.to_string());
        }
        "cyclic" => {
            if numbers.len() != 1 {
                return Err(arity_err(1));
            }
            ensure_cap(numbers[0], cap)?;
            FiniteGroup::cyclic(numbers[0] as usize)
        }
        "dihedral" => {
            if numbers.len() != 1 {
                return Err(arity_err(1));
            }
            ensure_cap(numbers[0].saturating_mul(2), cap)?;
            FiniteGroup::dihedral(numbers[0] as usize)
        }
        "quaternion" => {
            if numbers.len() != 1 {
                return Err(arity_err(1));
            }
            let k = numbers[0];
            if k >= 63 {
                return Err(format!("group order 2^{k} exceeds the cap of {cap} elements"));
            }
            ensure_cap(1u64 << k, cap)?;
            FiniteGroup::generalized_quaternion(k as u32)
        }
        other => return Err(format!("unrecognized group kind '{other}' ({usage})")),
    };
    group.map_err(|e| e.to_string())
}

fn ensure_cap(order: u64, cap: usize) -> Result<(), String> {
    if order > cap as u64 {
        Err(format!(
            "group order {order} exceeds the cap of {cap} elements (raise with --cap)"
        ))
    } else {
        Ok(())
    }
}

fn members_string(s: &Subgroup) -> String {
    let parts: Vec<String> = s.member_indices().iter().map(|m| m.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn subgroup_json(s: &Subgroup) -> Value {
    json!({ "members": s.member_indices(), "order": s.order() })
}

fn lattice_cmd(spec: &str, format: Format, cap: usize) -> Result<u8, String> {
    let g = build_group(spec, cap)?;
    let lat = all_subgroups_with_cap(&g, cap).map_err(|e| e.to_string())?;
    let flags = solitary_flags(&g, &lat);
    let normal: Vec<bool> = lat.nodes().iter().map(|s| is_normal(&g, s)).collect();
    let edges = lat.cover_edges();
    match format {
        Format::Text => {
            println!("{} (order {}): {} subgroups", g.label(), g.order(), lat.len());
            for (i, s) in lat.nodes().iter().enumerate() {
                let mut tags = String::new();
                if flags[i] {
                    tags.push_str("  solitary");
                }
                if normal[i] {
                    tags.push_str("  normal");
                }
                println!("  #{i}: order {}{tags}  members {}", s.order(), members_string(s));
            }
            println!("cover relations ({}):", edges.len());
            for (a, b) in &edges {
                println!("  #{a} < #{b}");
            }
        }
        Format::Json => {
            let nodes: Vec<Value> = lat
                .nodes()
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    json!({
                        "members": s.member_indices(),
                        "normal": normal[i],
                        "order": s.order(),
                        "solitary": flags[i],
                    })
                })
                .collect();
            let edges: Vec<Value> = edges
                .iter()
                .map(|(a, b)| json!({ "from": a, "to": b }))
                .collect();
            let doc = json!({
                "edges": edges,
                "group": { "label": g.label(), "order": g.order() },
                "nodes": nodes,
                "schema": 1,
            });
            println!("{doc}");
        }
        Format::Dot => print!("{}", render_dot(&g, &lat, &flags, &edges)),
    }
    Ok(0)
}

/// Hasse diagram in Graphviz syntax, one rank per subgroup order, solitary
/// subgroups drawn with a double border.
fn render_dot(
    g: &FiniteGroup,
    lat: &SubgroupLattice,
    flags: &[bool],
    edges: &[(usize, usize)],
) -> String {
    let mut out = String::new();
    out.push_str("digraph subgroups {\n");
    out.push_str(&format!(
        "  label = \"{} (order {}); double border = solitary\";\n",
        g.label(),
        g.order()
    ));
    out.push_str("  rankdir = BT;\n  node [shape = box];\n");
    for (i, s) in lat.nodes().iter().enumerate() {
        let label = if g.order() <= 32 {
            format!("#{i} order {} {}", s.order(), members_string(s))
        } else {
            format!("#{i} order {}", s.order())
        };
        let marker = if flags[i] { ", peripheries = 2" } else { "" };
        out.push_str(&format!("  n{i} [label = \"{label}\"{marker}];\n"));
    }
    let mut orders: Vec<usize> = lat.nodes().iter().map(|s| s.order()).collect();
    orders.dedup(); // nodes are sorted by order already
    for order in orders {
        let ids: Vec<String> = lat
            .nodes()
            .iter()
            .enumerate()
            .filter(|(_, s)| s.order() == order)
            .map(|(i, _)| format!("n{i};"))
            .collect();
        out.push_str(&format!("  {{ rank = same; {} }}\n", ids.join(" ")));
    }
    for (a, b) in edges {
        out.push_str(&format!("  n{a} -> n{b};\n"));
    }
    out.push_str("}\n");
    out
}

fn density_cmd(spec: &str, format: Format, cap: usize) -> Result<u8, String> {
    let g = build_group(spec, cap)?;
    let lat = all_subgroups_with_cap(&g, cap).map_err(|e| e.to_string())?;
    let flags = solitary_flags(&g, &lat);
    let report = density_from_parts(&lat, &flags);
    match format {
        Format::Json => {
            let counterexample = report
                .counterexample
                .as_ref()
                .map(|(h, k)| json!({ "lower": subgroup_json(h), "upper": subgroup_json(k) }))
                .unwrap_or(Value::Null);
            let doc = json!({
                "checked_pairs": report.checked_pairs,
                "counterexample": counterexample,
                "dense": report.verdict,
                "group": { "label": g.label(), "order": g.order() },
            });
            println!("{doc}");
        }
        _ => {
            println!(
                "{} (order {}): solitary subgroups {} dense",
                g.label(),
                g.order(),
                if report.verdict { "are" } else { "are NOT" }
            );
            if let Some((h, k)) = &report.counterexample {
                println!(
                    "  failing pair: order {} {} < order {} {} with no solitary subgroup strictly between",
                    h.order(),
                    members_string(h),
                    k.order(),
                    members_string(k)
                );
            }
            println!("  pairs checked: {}", report.checked_pairs);
        }
    }
    Ok(if report.verdict { 0 } else { 1 })
}

fn verify_cmd(max_order: u64, format: Format, cap: usize) -> Result<u8, String> {
    if max_order > cap as u64 {
        return Err(format!(
            "max order {max_order} exceeds the cap of {cap} elements (raise with --cap)"
        ));
    }
    let report = verify_classification(max_order);
    let witness = |w: Option<(u64, u64, u64)>| {
        w.map(|(m, n, r)| json!([m, n, r])).unwrap_or(Value::Null)
    };
    match format {
        Format::Json => {
            let disagreements: Vec<Value> = report
                .disagreements
                .iter()
                .map(|d| {
                    json!({
                        "brute_force_dense": d.brute_force_dense,
                        "case": d.case.to_string(),
                        "classified_dense": d.classified_dense,
                    })
                })
                .collect();
            let doc = json!({
                "agreements": report.agreements,
                "beta0_witness": witness(report.beta0_witness),
                "beta1_witness": witness(report.beta1_witness),
                "corpus_cases": report.corpus_cases,
                "disagreements": disagreements,
                "elapsed_ms": report.elapsed.as_millis() as u64,
                "max_order": report.max_order,
                "zm_triples": report.zm_triples,
            });
            println!("{doc}");
        }
        _ => {
            println!(
                "checked {} presentations and {} corpus groups up to order {} in {:.1?}",
                report.zm_triples, report.corpus_cases, report.max_order, report.elapsed
            );
            let fmt_witness = |w: Option<(u64, u64, u64)>| match w {
                Some((m, n, r)) => format!("ZM({m},{n},{r})"),
                None => "none".into(),
            };
            println!(
                "first dense witnesses: without extra prime {}, with extra prime {}",
                fmt_witness(report.beta0_witness),
                fmt_witness(report.beta1_witness)
            );
            if report.disagreements.is_empty() {
                println!(
                    "agreements: {} — classifier and brute force agree on every case",
                    report.agreements
                );
            } else {
                println!(
                    "agreements: {}, disagreements: {}",
                    report.agreements,
                    report.disagreements.len()
                );
                for d in &report.disagreements {
                    println!(
                        "  {}: classifier says {}, brute force says {}",
                        d.case, d.classified_dense, d.brute_force_dense
                    );
                }
            }
        }
    }
    Ok(if report.disagreements.is_empty() { 0 } else { 1 })
}
