//! Graphviz output for transition profiles and runs.

use std::fmt::Write as _;

use crate::alphabet::{Symbol, TapeSymbol};
use crate::error::Result;
use crate::machine::TwoWayMachine;
use crate::planarity::{ExtendedOrder, Side, Vertex};
use crate::states::StateId;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DotView {
    /// One cell: the profile of `⌊δ(x)⌋` with outputs as labels.
    Profile(TapeSymbol),
    /// The run on a word, drawn over one column of states per tape boundary.
    Run(Vec<Symbol>),
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// States in drawing order: the machine's order if any, else index order.
fn drawing_order(m: &TwoWayMachine) -> Vec<StateId> {
    m.states()
        .order()
        .map(<[StateId]>::to_vec)
        .unwrap_or_else(|| (0..m.states().len()).collect())
}

pub fn emit_dot(m: &TwoWayMachine, view: &DotView) -> Result<String> {
    match view {
        DotView::Profile(x) => Ok(profile_dot(m, x)),
        DotView::Run(w) => run_dot(m, w),
    }
}

fn vertex_id(v: Vertex) -> String {
    match v.side {
        Side::Left => format!("L{}", v.state),
        Side::Right => format!("R{}", v.state),
    }
}

fn profile_dot(m: &TwoWayMachine, x: &TapeSymbol) -> String {
    let s = m.states();
    let order = drawing_order(m);
    let mut out = String::new();
    let _ = writeln!(out, "digraph profile {{");
    let _ = writeln!(out, "  label=\"{}\";", escape(&x.to_string()));
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  node [shape=circle];");
    for side in [Side::Left, Side::Right] {
        let _ = writeln!(out, "  {{ rank=same;");
        // Top to bottom: largest state first, as in the cell drawing.
        for &q in order.iter().rev() {
            let v = Vertex::new(q, side);
            let _ = writeln!(
                out,
                "    {} [label=\"{}{}\"];",
                vertex_id(v),
                escape(s.name(q)),
                s.direction(q)
            );
        }
        let _ = writeln!(out, "  }}");
    }
    for pair in order.windows(2).rev() {
        for side in [Side::Left, Side::Right] {
            let _ = writeln!(
                out,
                "  {} -> {} [style=invis];",
                vertex_id(Vertex::new(pair[1], side)),
                vertex_id(Vertex::new(pair[0], side))
            );
        }
    }
    let profile = m.profile(x);
    let ext = ExtendedOrder::new(s).ok();
    let mut edges = profile.edges.clone();
    if let Some(ext) = &ext {
        edges.sort_by_key(|e| (ext.position(e.from), ext.position(e.to)));
    }
    for e in &edges {
        let label = e
            .label
            .as_ref()
            .map(|w| w.iter().map(Symbol::as_str).collect::<Vec<_>>().join(" "))
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "  {} -> {} [label=\"{}\"];",
            vertex_id(e.from),
            vertex_id(e.to),
            escape(&label)
        );
    }
    out.push_str("}\n");
    out
}

fn run_dot(m: &TwoWayMachine, w: &[Symbol]) -> Result<String> {
    let s = m.states();
    let order = drawing_order(m);
    let result = m.run_traced(w)?;
    let trace = result.trace.unwrap_or_default();
    let tape = TapeSymbol::tape(w);
    let mut out = String::new();
    let _ = writeln!(out, "digraph run {{");
    let _ = writeln!(out, "  label=\"{:?}\";", result.status);
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  node [shape=point];");
    for pos in 0..=tape.len() {
        let _ = writeln!(out, "  {{ rank=same;");
        for &q in order.iter().rev() {
            let _ = writeln!(
                out,
                "    p{pos}_{q} [xlabel=\"{}{}\"];",
                escape(s.name(q)),
                s.direction(q)
            );
        }
        let _ = writeln!(out, "  }}");
    }
    for (i, x) in tape.iter().enumerate() {
        let _ = writeln!(out, "  c{i} [shape=plaintext, label=\"{}\"];", escape(&x.to_string()));
    }
    for pair in trace.windows(2) {
        let (a, b) = (&pair[0].config, &pair[1].config);
        let label: Vec<&str> = pair[1].emitted.iter().map(Symbol::as_str).collect();
        let _ = writeln!(
            out,
            "  p{}_{} -> p{}_{} [color=red, penwidth=2, label=\"{}\"];",
            a.position(),
            a.state,
            b.position(),
            b.state,
            escape(&label.join(" "))
        );
    }
    out.push_str("}\n");
    Ok(out)
}
