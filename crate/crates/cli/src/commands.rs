use std::collections::BTreeSet;

use hyperkirchhoff_core::activation::activation_class_iter;
use hyperkirchhoff_core::contributor::minor_terms;
use hyperkirchhoff_core::format::{write_graph, GraphDocument};
use hyperkirchhoff_core::matrix::vertex_minor;
use hyperkirchhoff_core::{
    adjacency_matrix, classify, cofactor_tree_check, complete, contributor_sums, degree_matrix,
    enumerate_contributors, enumerate_sub_contributors, incidence_matrix, laplacian, minor_sums,
    universal_cut, ActivationClass, BigInt, CycleSet, IncidenceId, OrientedHypergraph, VertexId,
};

use crate::output::{cycle_notation, parity, render_matrix, signed, vertex_set, Table};
use crate::{
    parse_graph_file, read_input, verify, ActivationCommand, CliError, Command,
    ContributorsCommand, Format, MatrixKind, MinorMatrix, MinorOp, Outcome, Result, RunConfig,
};

/// Lattices with more cycles than this are not drawn.
const MAX_DRAWN_CYCLES: usize = 12;

pub(crate) fn dispatch(config: &RunConfig) -> Result<Outcome> {
    let format = config.format;
    if let Command::Validate { file } = &config.command {
        return validate(&read_input(file)?, format);
    }
    let g = parse_graph_file(&config.input)?;
    let dot_allowed = matches!(
        &config.command,
        Command::Activation(ActivationCommand::Lattice { .. })
            | Command::Activation(ActivationCommand::Cut { .. })
    );
    if format == Format::Dot && !dot_allowed {
        return Err(CliError::Usage(
            "dot output is only available for activation lattices and cuts".into(),
        ));
    }
    match &config.command {
        Command::Validate { .. } => unreachable!("handled above"),
        Command::Matrix { kind, .. } => {
            let m = match kind {
                MatrixKind::Incidence => incidence_matrix(&g),
                MatrixKind::Adjacency => adjacency_matrix(&g),
                MatrixKind::Laplacian => laplacian(&g),
                MatrixKind::Degree => degree_matrix(&g),
            };
            Ok(Outcome::ok(render_matrix(&m, format)?))
        }
        Command::PermL { .. } => full_sum(config, &g, Quantity::PermL),
        Command::DetL { .. } => full_sum(config, &g, Quantity::DetL),
        Command::PermA { .. } => full_sum(config, &g, Quantity::PermA),
        Command::DetA { .. } => full_sum(config, &g, Quantity::DetA),
        Command::Minor {
            rows,
            cols,
            matrix,
            op,
            ..
        } => minor_command(config, &g, rows, cols, *matrix, *op),
        Command::Contributors(ContributorsCommand::List { .. }) => contributors_list(config, &g),
        Command::Activation(ActivationCommand::List { .. }) => activation_list(&g, format),
        Command::Activation(ActivationCommand::Lattice { class, dot, .. }) => {
            lattice(&g, *class, *dot || format == Format::Dot, format)
        }
        Command::Activation(ActivationCommand::Cut {
            u, w, class, dot, ..
        }) => cut(&g, u, w, *class, *dot || format == Format::Dot, format),
        Command::Complete { emit, .. } => complete_command(&g, *emit, format),
        Command::Trees { u, w, .. } => trees(&g, u, w, format),
        Command::ChaikenCheck { rows, cols, .. } => chaiken_check(config, &g, rows, cols),
        Command::Verify { .. } => {
            let report = verify(&g, config);
            Ok(Outcome {
                output: report.render(format)?,
                success: report.passed(),
            })
        }
    }
}

fn validate(text: &str, format: Format) -> Result<Outcome> {
    let doc = GraphDocument::from_json(text)?;
    let builder = doc.into_builder()?;
    let report = builder.validate();
    if report.is_valid() {
        let g = builder.build()?;
        let mut t = Table::new(["vertices", "edges", "incidences", "bidirected"]);
        t.push([
            g.vertex_count().to_string(),
            g.edge_count().to_string(),
            g.incidence_count().to_string(),
            g.is_bidirected().to_string(),
        ]);
        return Ok(Outcome::ok(t.render(format)?));
    }
    let mut t = Table::new(["violation"]);
    for v in &report.violations {
        t.push([v.to_string()]);
    }
    Ok(Outcome {
        output: t.render(format)?,
        success: false,
    })
}

fn require_small(config: &RunConfig, g: &OrientedHypergraph) -> Result<()> {
    if g.vertex_count() > config.max_exhaustive {
        return Err(CliError::Usage(format!(
            "graph has {} vertices; contributor enumeration is limited to {} (see --max-exhaustive)",
            g.vertex_count(),
            config.max_exhaustive
        )));
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum Quantity {
    PermL,
    DetL,
    PermA,
    DetA,
}

fn full_sum(config: &RunConfig, g: &OrientedHypergraph, q: Quantity) -> Result<Outcome> {
    require_small(config, g)?;
    let sums = contributor_sums(g);
    let (name, lhs, rhs) = match q {
        Quantity::PermL => ("perm(L)", sums.perm_l, laplacian(g).permanent()?),
        Quantity::DetL => ("det(L)", sums.det_l, laplacian(g).determinant()?),
        Quantity::PermA => ("perm(A)", sums.perm_a, adjacency_matrix(g).permanent()?),
        Quantity::DetA => ("det(A)", sums.det_a, adjacency_matrix(g).determinant()?),
    };
    let ok = lhs == rhs;
    let mut t = Table::new(["quantity", "contributors", "matrix", "status"]);
    t.push([
        name.to_string(),
        lhs.to_string(),
        rhs.to_string(),
        status(ok),
    ]);
    Ok(Outcome {
        output: t.render(config.format)?,
        success: ok,
    })
}

fn status(ok: bool) -> String {
    if ok { "pass" } else { "FAIL" }.to_string()
}

fn minor_command(
    config: &RunConfig,
    g: &OrientedHypergraph,
    rows: &[String],
    cols: &[String],
    matrix: MinorMatrix,
    op: MinorOp,
) -> Result<Outcome> {
    require_small(config, g)?;
    let (us, ws) = strikes(g, rows, cols)?;
    let sums = minor_sums(g, &us, &ws)?;
    let (m, mname) = match matrix {
        MinorMatrix::Laplacian => (laplacian(g), "L"),
        MinorMatrix::Adjacency => (adjacency_matrix(g), "A"),
    };
    let m = vertex_minor(&m, &us, &ws);
    let mut t = Table::new(["quantity", "contributors", "matrix", "status"]);
    let mut push = |name: String, lhs: &BigInt, rhs: &BigInt| {
        let ok = lhs == rhs;
        t.push([name, lhs.to_string(), rhs.to_string(), status(ok)]);
        ok
    };
    let label = format!("{}[{};{}]", mname, vertex_set(g, &us), vertex_set(g, &ws));
    let ok = match (matrix, op) {
        (MinorMatrix::Laplacian, MinorOp::Det) => {
            let d = m.determinant()?;
            let a = push(format!("det {label}"), &sums.det_l, &d);
            let b = push(format!("det {label} by paths"), &sums.det_l_by_paths, &d);
            a && b
        }
        (MinorMatrix::Laplacian, MinorOp::Perm) => {
            push(format!("perm {label}"), &sums.perm_l, &m.permanent()?)
        }
        (MinorMatrix::Adjacency, MinorOp::Det) => {
            push(format!("det {label}"), &sums.det_a, &m.determinant()?)
        }
        (MinorMatrix::Adjacency, MinorOp::Perm) => {
            push(format!("perm {label}"), &sums.perm_a, &m.permanent()?)
        }
    };
    Ok(Outcome {
        output: t.render(config.format)?,
        success: ok,
    })
}

fn strikes(
    g: &OrientedHypergraph,
    rows: &[String],
    cols: &[String],
) -> Result<(Vec<VertexId>, Vec<VertexId>)> {
    let clean = |v: &[String]| -> Vec<String> {
        v.iter()
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect()
    };
    let us = g.vertex_ids(&clean(rows))?;
    let ws = g.vertex_ids(&clean(cols))?;
    if us.len() != ws.len() {
        return Err(hyperkirchhoff_core::Error::SizeMismatch {
            rows: us.len(),
            cols: ws.len(),
        }
        .into());
    }
    Ok((us, ws))
}

fn contributors_list(config: &RunConfig, g: &OrientedHypergraph) -> Result<Outcome> {
    require_small(config, g)?;
    let mut t = Table::new([
        "tails",
        "heads",
        "backsteps",
        "ec",
        "oc",
        "pc",
        "nc",
        "tc",
        "perm_l",
        "det_l",
        "perm_a",
        "det_a",
    ]);
    for c in enumerate_contributors(g) {
        let p = classify(g, &c);
        let live = !p.is_zero();
        let strong = live && c.is_strong();
        let term = |on: bool, k: usize| signed(if on { parity(k) } else { 0 });
        let tails: Vec<String> = c
            .steps()
            .iter()
            .map(|s| tail_label(g, s.tail_incidence))
            .collect();
        t.push([
            tails.join(","),
            cycle_notation(g, &c.head_permutation()),
            vertex_set(g, &c.backstep_vertices()),
            p.ec.to_string(),
            p.oc.to_string(),
            p.pc.to_string(),
            p.nc.to_string(),
            p.tc.to_string(),
            term(live, p.oc + p.nc),
            term(live, p.pc),
            term(strong, p.nc),
            term(strong, p.ec + p.nc),
        ]);
    }
    Ok(Outcome::ok(t.render(config.format)?))
}

/// `v1:e2`, with `/k` appended when the edge meets the vertex more than
/// once (loops).
fn tail_label(g: &OrientedHypergraph, i: IncidenceId) -> String {
    let inc = g.incidence(i);
    let same: Vec<IncidenceId> = g
        .incidences_of(inc.edge)
        .iter()
        .copied()
        .filter(|&j| g.incidence(j).vertex == inc.vertex)
        .collect();
    let base = format!("{}:{}", g.vertex_name(inc.vertex), g.edge_name(inc.edge));
    if same.len() > 1 {
        let k = same.iter().position(|&j| j == i).expect("own incidence") + 1;
        format!("{base}/{k}")
    } else {
        base
    }
}

fn cycle_list(g: &OrientedHypergraph, class: &ActivationClass) -> String {
    class
        .cycles()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let names: Vec<&str> = c.iter().map(|&v| g.vertex_name(v)).collect();
            format!("c{}=({})", k + 1, names.join(" "))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn activation_list(g: &OrientedHypergraph, format: Format) -> Result<Outcome> {
    let mut t = Table::new(["class", "tails", "cycles", "members", "cycle_list"]);
    for class in activation_class_iter(g)? {
        let tails: Vec<String> = class.tails().iter().map(|&i| tail_label(g, i)).collect();
        t.push([
            class.id().to_string(),
            tails.join(","),
            class.cycle_count().to_string(),
            class.member_count().to_string(),
            cycle_list(g, &class),
        ]);
    }
    Ok(Outcome::ok(t.render(format)?))
}

fn find_class(g: &OrientedHypergraph, id: usize) -> Result<ActivationClass> {
    activation_class_iter(g)?
        .nth(id)
        .ok_or_else(|| CliError::Usage(format!("no activation class {id}")))
}

fn member_sign(g: &OrientedHypergraph, class: &ActivationClass, s: CycleSet) -> Result<i64> {
    Ok(parity(classify(g, &class.member(s)?).pc))
}

fn check_drawable(class: &ActivationClass) -> Result<()> {
    if class.cycle_count() > MAX_DRAWN_CYCLES {
        return Err(CliError::Usage(format!(
            "class {} has {} cycles; lattices are drawn up to {MAX_DRAWN_CYCLES}",
            class.id(),
            class.cycle_count()
        )));
    }
    Ok(())
}

/// Nodes and covering edges of one class's lattice in DOT syntax.
/// `filled` members are shaded.
fn dot_lattice_body(
    g: &OrientedHypergraph,
    class: &ActivationClass,
    prefix: &str,
    indent: &str,
    filled: &BTreeSet<CycleSet>,
) -> Result<String> {
    let mut out = String::new();
    let all = class.all_cycles();
    for s in all.subsets() {
        let style = if filled.contains(&s) {
            ", style=filled"
        } else {
            ""
        };
        out.push_str(&format!(
            "{indent}{prefix}{} [label=\"S={} sign={}\"{style}];\n",
            s.0,
            s,
            signed(member_sign(g, class, s)?)
        ));
    }
    for s in all.subsets() {
        for c in all.iter().filter(|&c| !s.contains(c)) {
            out.push_str(&format!(
                "{indent}{prefix}{} -> {prefix}{};\n",
                s.0,
                s.with(c).0
            ));
        }
    }
    Ok(out)
}

fn lattice(g: &OrientedHypergraph, id: usize, dot: bool, format: Format) -> Result<Outcome> {
    let class = find_class(g, id)?;
    check_drawable(&class)?;
    if dot {
        let body = dot_lattice_body(g, &class, "s", "  ", &BTreeSet::new())?;
        return Ok(Outcome::ok(format!(
            "digraph lattice_{id} {{\n  rankdir=BT;\n{body}}}\n"
        )));
    }
    let mut t = Table::new(["active", "sign", "heads", "covers"]);
    let all = class.all_cycles();
    for s in all.subsets() {
        let m = class.member(s)?;
        let covers: Vec<String> = all
            .iter()
            .filter(|&c| !s.contains(c))
            .map(|c| s.with(c).to_string())
            .collect();
        t.push([
            s.to_string(),
            signed(member_sign(g, &class, s)?),
            cycle_notation(g, &m.head_permutation()),
            covers.join(" "),
        ]);
    }
    Ok(Outcome::ok(t.render(format)?))
}

fn cut(
    g: &OrientedHypergraph,
    u: &str,
    w: &str,
    class: Option<usize>,
    dot: bool,
    format: Format,
) -> Result<Outcome> {
    let ids = g.vertex_ids(&[u, w])?;
    let (u, w) = (ids[0], ids[1]);
    let classes: Vec<ActivationClass> = match class {
        Some(id) => vec![find_class(g, id)?],
        None => activation_class_iter(g)?.collect(),
    };
    if dot {
        let mut out = format!(
            "digraph cut {{\n  rankdir=BT;\n  label=\"({};{})-cut\";\n",
            g.vertex_name(u),
            g.vertex_name(w)
        );
        for class in &classes {
            check_drawable(class)?;
            let c = class.cut(u, w);
            let filled: BTreeSet<CycleSet> = c.members.iter().copied().collect();
            out.push_str(&format!(
                "  subgraph cluster_{} {{\n    label=\"class {} {:?}\";\n",
                class.id(),
                class.id(),
                c.kind
            ));
            out.push_str(&dot_lattice_body(
                g,
                class,
                &format!("k{}_", class.id()),
                "    ",
                &filled,
            )?);
            out.push_str("  }\n");
        }
        out.push_str("}\n");
        return Ok(Outcome::ok(out));
    }
    let mut t = Table::new(["class", "kind", "generator", "size", "members"]);
    for class in &classes {
        let c = class.cut(u, w);
        let members: Vec<String> = c.members.iter().map(ToString::to_string).collect();
        t.push([
            class.id().to_string(),
            format!("{:?}", c.kind).to_lowercase(),
            c.generator
                .map(|s| s.to_string())
                .unwrap_or_else(|| "-".into()),
            c.len().to_string(),
            members.join(" "),
        ]);
    }
    Ok(Outcome::ok(t.render(format)?))
}

fn complete_command(g: &OrientedHypergraph, emit: bool, format: Format) -> Result<Outcome> {
    let gc = complete(g)?;
    if emit {
        return Ok(Outcome::ok(write_graph(gc.graph()) + "\n"));
    }
    let mut t = Table::new(["added_edge", "u", "v"]);
    for &e in gc.added_edges() {
        let inc = gc.graph().incidences_of(e);
        t.push([
            gc.graph().edge_name(e).to_string(),
            gc.graph()
                .vertex_name(gc.graph().incidence(inc[0]).vertex)
                .to_string(),
            gc.graph()
                .vertex_name(gc.graph().incidence(inc[1]).vertex)
                .to_string(),
        ]);
    }
    Ok(Outcome::ok(t.render(format)?))
}

fn trees(g: &OrientedHypergraph, u: &str, w: &str, format: Format) -> Result<Outcome> {
    let ids = g.vertex_ids(&[u, w])?;
    let check = cofactor_tree_check(g, ids[0], ids[1])?;
    let mut t = Table::new([
        "u",
        "w",
        "cofactor",
        "tree_ideals",
        "spanning_trees",
        "status",
    ]);
    t.push([
        g.vertex_name(check.u).to_string(),
        g.vertex_name(check.w).to_string(),
        check.cofactor.to_string(),
        check.ideals.to_string(),
        check.oracle.to_string(),
        status(check.passed()),
    ]);
    Ok(Outcome {
        output: t.render(format)?,
        success: check.passed(),
    })
}

/// Determinant of the `(U;W)` Laplacian minor three ways: exact
/// elimination, the sub-contributor sum, and the sum over the trimmed
/// universal cut of the completion.
fn chaiken_check(
    config: &RunConfig,
    g: &OrientedHypergraph,
    rows: &[String],
    cols: &[String],
) -> Result<Outcome> {
    require_small(config, g)?;
    let (us, ws) = strikes(g, rows, cols)?;
    let matrix = vertex_minor(&laplacian(g), &us, &ws).determinant()?;
    let direct: BTreeSet<_> = enumerate_sub_contributors(g, &us, &ws)?.collect();
    let sums = minor_sums(g, &us, &ws)?;
    let gc = complete(g)?;
    let universal = universal_cut(&gc, &us, &ws)?;
    let via_cut: i64 = universal
        .iter()
        .map(|c| minor_terms(c, &classify(g, c)).det_l as i64)
        .sum();
    let via_cut = BigInt::from(via_cut);
    let same_set = universal == direct;
    let mut t = Table::new(["quantity", "value", "status"]);
    t.push([
        "det of minor (elimination)".to_string(),
        matrix.to_string(),
        "-".to_string(),
    ]);
    t.push([
        "sub-contributor sum".to_string(),
        sums.det_l.to_string(),
        status(sums.det_l == matrix),
    ]);
    t.push([
        "path-factored sum".to_string(),
        sums.det_l_by_paths.to_string(),
        status(sums.det_l_by_paths == matrix),
    ]);
    t.push([
        "universal cut sum".to_string(),
        via_cut.to_string(),
        status(via_cut == matrix),
    ]);
    t.push([
        "universal cut = sub-contributors".to_string(),
        format!("{} / {}", universal.len(), direct.len()),
        status(same_set),
    ]);
    let ok = sums.det_l == matrix && sums.det_l_by_paths == matrix && via_cut == matrix && same_set;
    Ok(Outcome {
        output: t.render(config.format)?,
        success: ok,
    })
}
