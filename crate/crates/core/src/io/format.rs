//! Line-oriented text format for machines.
//!
//! ```text
//! machine 2dft
//! input a b c
//! output a b c
//! states 0:> 1:< 2:< 3:>
//! order 0 1 2 3
//! initial 0
//! final 3
//! t 0 a -> 0 : ""
//! ```
//!
//! `#` starts a comment outside quoted strings. `^` and `$` stand for the end
//! markers. Sequential transducers (`machine seq`) list plain state names and
//! give final outputs as `final q : "w"`; register transducers
//! (`machine mrt`) declare `registers X Y` and updates `u a X := "a" X "b"`.

use std::fmt::Write as _;

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::constructions::{MonotoneRegisterTransducer, SequentialTransducer, UpdateItem};
use crate::error::{Error, Result};
use crate::machine::{MachineKind, TwoWayMachine};
use crate::states::{DirectedStateSet, Direction};

/// Header tag of a two-way machine document.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoWayTag {
    /// `2dfa`: an automaton.
    Automaton,
    /// `2dft`: a transducer.
    Transducer,
    /// `2rft-claim`: a transducer declared to be reversible and planar.
    ReversiblePlanar,
}

impl TwoWayTag {
    pub fn as_str(self) -> &'static str {
        match self {
            TwoWayTag::Automaton => "2dfa",
            TwoWayTag::Transducer => "2dft",
            TwoWayTag::ReversiblePlanar => "2rft-claim",
        }
    }

    pub fn for_machine(m: &TwoWayMachine) -> Self {
        match m.kind() {
            MachineKind::Automaton => TwoWayTag::Automaton,
            MachineKind::Transducer => TwoWayTag::Transducer,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MachineDocument {
    TwoWay { tag: TwoWayTag, machine: TwoWayMachine },
    Sequential(SequentialTransducer),
    Register(MonotoneRegisterTransducer),
}

impl MachineDocument {
    pub fn kind_tag(&self) -> &'static str {
        match self {
            MachineDocument::TwoWay { tag, .. } => tag.as_str(),
            MachineDocument::Sequential(_) => "seq",
            MachineDocument::Register(_) => "mrt",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Bare(String),
    Quoted(String),
}

#[derive(Clone, Debug)]
struct Tok {
    token: Token,
    column: usize,
}

#[derive(Clone, Debug)]
struct Line {
    number: usize,
    toks: Vec<Tok>,
}

impl Line {
    fn keyword(&self) -> &str {
        match &self.toks[0].token {
            Token::Bare(s) => s,
            Token::Quoted(_) => "",
        }
    }

    fn error(&self, index: usize, message: impl Into<String>) -> Error {
        let column = self.toks.get(index).map_or_else(
            || self.toks.last().map_or(1, |t| t.column),
            |t| t.column,
        );
        Error::parse(self.number, column, message)
    }

    fn bare(&self, index: usize, what: &str) -> Result<&str> {
        match self.toks.get(index).map(|t| &t.token) {
            Some(Token::Bare(s)) => Ok(s),
            Some(Token::Quoted(_)) => Err(self.error(index, format!("expected {what}, found a quoted string"))),
            None => Err(self.error(index, format!("expected {what}"))),
        }
    }

    fn quoted(&self, index: usize) -> Result<&str> {
        match self.toks.get(index).map(|t| &t.token) {
            Some(Token::Quoted(s)) => Ok(s),
            _ => Err(self.error(index, "expected a quoted string")),
        }
    }

    fn expect(&self, index: usize, literal: &str) -> Result<()> {
        if self.bare(index, &format!("`{literal}`"))? == literal {
            Ok(())
        } else {
            Err(self.error(index, format!("expected `{literal}`")))
        }
    }

    fn expect_end(&self, index: usize) -> Result<()> {
        if self.toks.len() > index {
            Err(self.error(index, "unexpected trailing input"))
        } else {
            Ok(())
        }
    }

    fn bare_list(&self, from: usize, what: &str) -> Result<Vec<&str>> {
        (from..self.toks.len()).map(|i| self.bare(i, what)).collect()
    }

    /// Attaches this line's number to a semantic error.
    fn locate(&self, e: Error) -> Error {
        match e {
            Error::Parse { .. } => e,
            other => Error::Validation(format!("line {}: {other}", self.number)),
        }
    }
}

fn lex(text: &str) -> Result<Vec<Line>> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let number = i + 1;
        let chars: Vec<char> = raw.chars().collect();
        let mut toks = Vec::new();
        let mut j = 0;
        while j < chars.len() {
            let c = chars[j];
            if c.is_whitespace() {
                j += 1;
            } else if c == '#' {
                break;
            } else if c == '"' {
                let start = j;
                j += 1;
                let mut s = String::new();
                while j < chars.len() && chars[j] != '"' {
                    s.push(chars[j]);
                    j += 1;
                }
                if j == chars.len() {
                    return Err(Error::parse(number, start + 1, "unterminated string"));
                }
                j += 1;
                toks.push(Tok {
                    token: Token::Quoted(s),
                    column: start + 1,
                });
            } else {
                let start = j;
                let mut s = String::new();
                while j < chars.len() && !chars[j].is_whitespace() && chars[j] != '"' && chars[j] != '#' {
                    s.push(chars[j]);
                    j += 1;
                }
                toks.push(Tok {
                    token: Token::Bare(s),
                    column: start + 1,
                });
            }
        }
        if !toks.is_empty() {
            lines.push(Line { number, toks });
        }
    }
    Ok(lines)
}

/// Header lines shared by every document kind.
#[derive(Default)]
struct Header<'a> {
    input: Option<&'a Line>,
    output: Option<&'a Line>,
    states: Option<&'a Line>,
    order: Option<&'a Line>,
    initial: Option<&'a Line>,
    registers: Option<&'a Line>,
    finals: Vec<&'a Line>,
    body: Vec<&'a Line>,
}

fn split_header<'a>(lines: &'a [Line], allowed: &[&str], body: &[&str]) -> Result<Header<'a>> {
    let mut h = Header::default();
    for line in lines {
        let kw = line.keyword();
        if !allowed.contains(&kw) && !body.contains(&kw) {
            return Err(line.error(0, format!("unknown directive `{kw}`")));
        }
        let slot = match kw {
            "input" => &mut h.input,
            "output" => &mut h.output,
            "states" => &mut h.states,
            "order" => &mut h.order,
            "initial" => &mut h.initial,
            "registers" => &mut h.registers,
            "final" => {
                h.finals.push(line);
                continue;
            }
            _ => {
                h.body.push(line);
                continue;
            }
        };
        if slot.replace(line).is_some() {
            return Err(line.error(0, format!("duplicate `{kw}` line")));
        }
    }
    Ok(h)
}

fn alphabet_of(line: Option<&Line>) -> Result<Alphabet> {
    match line {
        None => Ok(Alphabet::default()),
        Some(l) => Alphabet::new(l.bare_list(1, "a symbol")?).map_err(|e| l.locate(e)),
    }
}

fn required<'a>(line: Option<&'a Line>, kw: &str) -> Result<&'a Line> {
    line.ok_or_else(|| Error::parse(1, 1, format!("missing `{kw}` line")))
}

fn quoted_word(line: &Line, index: usize, alphabet: &Alphabet) -> Result<Word> {
    let text = line.quoted(index)?;
    alphabet.tokenize(text).map_err(|e| line.error(index, e.to_string()))
}

/// Parses any machine document.
pub fn parse_document(text: &str) -> Result<MachineDocument> {
    let lines = lex(text)?;
    let Some((head, rest)) = lines.split_first() else {
        return Err(Error::parse(1, 1, "empty document"));
    };
    head.expect(0, "machine")?;
    let kind = head.bare(1, "a machine kind")?;
    head.expect_end(2)?;
    match kind {
        "2dfa" => Ok(MachineDocument::TwoWay {
            tag: TwoWayTag::Automaton,
            machine: parse_two_way_body(rest, MachineKind::Automaton)?,
        }),
        "2dft" | "2rft-claim" => Ok(MachineDocument::TwoWay {
            tag: if kind == "2dft" {
                TwoWayTag::Transducer
            } else {
                TwoWayTag::ReversiblePlanar
            },
            machine: parse_two_way_body(rest, MachineKind::Transducer)?,
        }),
        "seq" => Ok(MachineDocument::Sequential(parse_sequential_body(rest)?)),
        "mrt" => Ok(MachineDocument::Register(parse_register_body(rest)?)),
        other => Err(head.error(1, format!("unknown machine kind `{other}`"))),
    }
}

/// Parses a `2dfa`, `2dft` or `2rft-claim` document.
pub fn parse_two_way(text: &str) -> Result<TwoWayMachine> {
    match parse_document(text)? {
        MachineDocument::TwoWay { machine, .. } => Ok(machine),
        other => Err(Error::validation(format!(
            "expected a two-way machine, found `{}`",
            other.kind_tag()
        ))),
    }
}

fn parse_two_way_body(lines: &[Line], kind: MachineKind) -> Result<TwoWayMachine> {
    let h = split_header(lines, &["input", "output", "states", "order", "initial", "final"], &["t"])?;
    let input = alphabet_of(Some(required(h.input, "input")?))?;
    let output = alphabet_of(h.output)?;
    let states_line = required(h.states, "states")?;
    let mut decls = Vec::new();
    for i in 1..states_line.toks.len() {
        let tok = states_line.bare(i, "a state")?;
        let (name, dir) = tok
            .rsplit_once(':')
            .ok_or_else(|| states_line.error(i, "expected `name:>` or `name:<`"))?;
        let dir = match dir {
            ">" => Direction::Forward,
            "<" => Direction::Backward,
            _ => return Err(states_line.error(i, "direction must be `>` or `<`")),
        };
        decls.push((name.to_string(), dir));
    }
    let mut states = DirectedStateSet::new(decls).map_err(|e| states_line.locate(e))?;
    match h.order {
        None => states = states.with_natural_order(),
        Some(l) => {
            let order = l
                .bare_list(1, "a state")?
                .into_iter()
                .map(|s| states.index_of(s))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| l.locate(e))?;
            states.set_order(order).map_err(|e| l.locate(e))?;
        }
    }
    let initial_line = required(h.initial, "initial")?;
    let initial = states
        .index_of(initial_line.bare(1, "a state")?)
        .map_err(|e| initial_line.locate(e))?;
    initial_line.expect_end(2)?;
    let mut finals = Vec::new();
    for l in &h.finals {
        for s in l.bare_list(1, "a state")? {
            finals.push(states.index_of(s).map_err(|e| l.locate(e))?);
        }
    }
    let mut m =
        TwoWayMachine::new(kind, input, output.clone(), states, initial, finals).map_err(|e| initial_line.locate(e))?;
    for l in &h.body {
        let source = l.bare(1, "a source state")?.to_string();
        let on = l.bare(2, "a symbol")?.to_string();
        l.expect(3, "->")?;
        let target = l.bare(4, "a target state")?.to_string();
        let out = if l.toks.len() > 5 {
            l.expect(5, ":")?;
            let w = quoted_word(l, 6, &output)?;
            l.expect_end(7)?;
            w
        } else {
            Word::new()
        };
        m.add(&on, &source, &out, &target).map_err(|e| l.locate(e))?;
    }
    Ok(m)
}

fn parse_sequential_body(lines: &[Line]) -> Result<SequentialTransducer> {
    let h = split_header(lines, &["input", "output", "states", "initial", "final"], &["t"])?;
    let input = alphabet_of(Some(required(h.input, "input")?))?;
    let output = alphabet_of(h.output)?;
    let states_line = required(h.states, "states")?;
    let names: Vec<String> = states_line.bare_list(1, "a state")?.into_iter().map(String::from).collect();
    let initial_line = required(h.initial, "initial")?;
    let initial_name = initial_line.bare(1, "a state")?;
    initial_line.expect_end(2)?;
    let initial = names
        .iter()
        .position(|s| s == initial_name)
        .ok_or_else(|| initial_line.locate(Error::UnknownState(initial_name.into())))?;
    let mut seq = SequentialTransducer::new(input, output.clone(), names, initial).map_err(|e| states_line.locate(e))?;
    for l in &h.body {
        let source = seq.index_of(l.bare(1, "a source state")?).map_err(|e| l.locate(e))?;
        let letter = Symbol::new(l.bare(2, "a letter")?);
        l.expect(3, "->")?;
        let target = seq.index_of(l.bare(4, "a target state")?).map_err(|e| l.locate(e))?;
        let out = if l.toks.len() > 5 {
            l.expect(5, ":")?;
            let w = quoted_word(l, 6, &output)?;
            l.expect_end(7)?;
            w
        } else {
            Word::new()
        };
        if seq.transition(&letter, source).is_some() {
            return Err(l.locate(Error::validation(format!("second transition on `{letter}`"))));
        }
        seq.set_transition(&letter, source, target, out).map_err(|e| l.locate(e))?;
    }
    for l in &h.finals {
        let q = seq.index_of(l.bare(1, "a state")?).map_err(|e| l.locate(e))?;
        l.expect(2, ":")?;
        let w = quoted_word(l, 3, &output)?;
        l.expect_end(4)?;
        seq.set_final_output(q, w).map_err(|e| l.locate(e))?;
    }
    seq.check_total()?;
    Ok(seq)
}

fn parse_register_body(lines: &[Line]) -> Result<MonotoneRegisterTransducer> {
    let h = split_header(lines, &["input", "output", "registers"], &["u"])?;
    let input = alphabet_of(Some(required(h.input, "input")?))?;
    let output = alphabet_of(h.output)?;
    let reg_line = required(h.registers, "registers")?;
    let regs: Vec<String> = reg_line.bare_list(1, "a register")?.into_iter().map(String::from).collect();
    let mut mrt = MonotoneRegisterTransducer::new(input, output.clone(), regs).map_err(|e| reg_line.locate(e))?;
    for l in &h.body {
        let letter = Symbol::new(l.bare(1, "a letter")?);
        let reg_name = l.bare(2, "a register")?;
        let reg = mrt
            .register_index(reg_name)
            .ok_or_else(|| l.error(2, format!("unknown register `{reg_name}`")))?;
        l.expect(3, ":=")?;
        let mut rhs = Vec::new();
        for i in 4..l.toks.len() {
            match &l.toks[i].token {
                Token::Quoted(_) => {
                    rhs.extend(quoted_word(l, i, &output)?.into_iter().map(UpdateItem::Symbol));
                }
                Token::Bare(name) => {
                    let r = mrt
                        .register_index(name)
                        .ok_or_else(|| l.error(i, format!("unknown register `{name}`")))?;
                    rhs.push(UpdateItem::Register(r));
                }
            }
        }
        mrt.set_update(&letter, reg, rhs).map_err(|e| l.locate(e))?;
    }
    Ok(mrt)
}

fn quote(alphabet: &Alphabet, w: &[Symbol]) -> String {
    format!("\"{}\"", alphabet.format(w))
}

fn symbol_list(a: &Alphabet) -> String {
    a.symbols().iter().map(Symbol::as_str).collect::<Vec<_>>().join(" ")
}

pub fn serialize_two_way(tag: TwoWayTag, m: &TwoWayMachine) -> String {
    let s = m.states();
    let mut out = String::new();
    let _ = writeln!(out, "machine {}", tag.as_str());
    let _ = writeln!(out, "input {}", symbol_list(m.input_alphabet()));
    if !m.output_alphabet().is_empty() {
        let _ = writeln!(out, "output {}", symbol_list(m.output_alphabet()));
    }
    let decls: Vec<String> = (0..s.len()).map(|q| format!("{}:{}", s.name(q), s.direction(q))).collect();
    let _ = writeln!(out, "states {}", decls.join(" "));
    if let Some(order) = s.order() {
        let names: Vec<&str> = order.iter().map(|&q| s.name(q)).collect();
        let _ = writeln!(out, "order {}", names.join(" "));
    }
    let _ = writeln!(out, "initial {}", s.name(m.initial()));
    if !m.finals().is_empty() {
        let names: Vec<&str> = m.finals().iter().map(|&q| s.name(q)).collect();
        let _ = writeln!(out, "final {}", names.join(" "));
    }
    for (on, ts) in m.delta() {
        for t in ts {
            let _ = write!(out, "t {} {} -> {}", s.name(t.source), on, s.name(t.target));
            if m.kind() == MachineKind::Transducer {
                let _ = write!(out, " : {}", quote(m.output_alphabet(), &t.output));
            }
            out.push('\n');
        }
    }
    out
}

pub fn serialize_sequential(seq: &SequentialTransducer) -> String {
    let names = seq.state_names();
    let mut out = String::from("machine seq\n");
    let _ = writeln!(out, "input {}", symbol_list(seq.input_alphabet()));
    if !seq.output_alphabet().is_empty() {
        let _ = writeln!(out, "output {}", symbol_list(seq.output_alphabet()));
    }
    let _ = writeln!(out, "states {}", names.join(" "));
    let _ = writeln!(out, "initial {}", names[seq.initial()]);
    for a in seq.input_alphabet().symbols() {
        for q in 0..names.len() {
            if let Some((r, w)) = seq.transition(a, q) {
                let _ = writeln!(out, "t {} {a} -> {} : {}", names[q], names[r], quote(seq.output_alphabet(), w));
            }
        }
    }
    for (q, name) in names.iter().enumerate() {
        let _ = writeln!(out, "final {name} : {}", quote(seq.output_alphabet(), seq.final_output(q)));
    }
    out
}

pub fn serialize_register(mrt: &MonotoneRegisterTransducer) -> String {
    let regs = mrt.registers();
    let mut out = String::from("machine mrt\n");
    let _ = writeln!(out, "input {}", symbol_list(mrt.input_alphabet()));
    if !mrt.output_alphabet().is_empty() {
        let _ = writeln!(out, "output {}", symbol_list(mrt.output_alphabet()));
    }
    let _ = writeln!(out, "registers {}", regs.join(" "));
    for (a, u) in mrt.updates() {
        for (r, name) in regs.iter().enumerate() {
            let _ = write!(out, "u {a} {name} :=");
            let items = u.get(r);
            if items.is_empty() {
                out.push_str(" \"\"");
            }
            let mut pending: Vec<Symbol> = Vec::new();
            for item in items {
                match item {
                    UpdateItem::Symbol(s) => pending.push(s.clone()),
                    UpdateItem::Register(x) => {
                        if !pending.is_empty() {
                            let _ = write!(out, " {}", quote(mrt.output_alphabet(), &pending));
                            pending.clear();
                        }
                        let _ = write!(out, " {}", regs[*x]);
                    }
                }
            }
            if !pending.is_empty() {
                let _ = write!(out, " {}", quote(mrt.output_alphabet(), &pending));
            }
            out.push('\n');
        }
    }
    out
}

pub fn serialize(doc: &MachineDocument) -> String {
    match doc {
        MachineDocument::TwoWay { tag, machine } => serialize_two_way(*tag, machine),
        MachineDocument::Sequential(s) => serialize_sequential(s),
        MachineDocument::Register(m) => serialize_register(m),
    }
}
