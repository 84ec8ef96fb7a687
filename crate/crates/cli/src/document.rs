//! The line-oriented input format.
//!
//! ```text
//! # comment
//! field 32003
//! vertices 1 2
//! arrow a : 1 -> 2
//! arrow x : 2 -> 2
//! relation x*x*x
//! order x a
//! bounds 6 12
//! module M
//!   generator g : 1 @ 0
//!   row g*a*x - 2*g*a*x
//! end
//! ```
//!
//! A term is `[coeff*]name(*name)*`; in a module row the first name is a
//! generator and the rest are arrows. Coefficients are reduced modulo the
//! field, duplicate words are merged, and the document is validated while
//! parsing, so every error carries a line and column.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use pkoszul::groebner::{coordinates, GroebnerBasis, MonomialOrder};
use pkoszul::modules::{FreeModule, Generator, ModuleMap, ModulePresentation};
use pkoszul::presentation::{AlgebraElement, Quiver, QuiverPresentation};
use pkoszul::{GradedAlgebra, PrimeField};

pub const DEFAULT_CHAR: u32 = 32003;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// `coeff * w_1 * ... * w_k` with `coeff` in `[1, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: u32,
    pub word: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowDecl {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorDecl {
    pub name: String,
    pub vertex: String,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDecl {
    pub name: String,
    pub generators: Vec<GeneratorDecl>,
    pub rows: Vec<Vec<Term>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    pub field: u32,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDecl>,
    pub relations: Vec<Vec<Term>>,
    pub order: Option<Vec<String>>,
    pub bounds: Option<(usize, usize)>,
    pub modules: Vec<ModuleDecl>,
}

pub fn parse_input(text: &str) -> Result<InputDocument, ParseError> {
    parse_input_with_char(text, None)
}

/// Parses with the `field` line overridden by `char_override` when given.
pub fn parse_input_with_char(text: &str, char_override: Option<u32>) -> Result<InputDocument, ParseError> {
    Parser::default().run(text, char_override)
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

fn is_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '\''))
}

fn is_symbol_name(s: &str) -> bool {
    is_name(s) && !s.chars().all(|c| c.is_ascii_digit())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok<'a> {
    Plus,
    Minus,
    Star,
    Word(&'a str),
}

/// Splits an expression into tokens with 1-based columns.
fn lex(s: &str, offset: usize) -> Vec<(Tok<'_>, usize)> {
    let mut out = Vec::new();
    let mut chars = s.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        let col = offset + s[..i].chars().count();
        match c {
            _ if c.is_whitespace() => {
                chars.next();
            }
            '+' => {
                out.push((Tok::Plus, col));
                chars.next();
            }
            '-' => {
                out.push((Tok::Minus, col));
                chars.next();
            }
            '*' => {
                out.push((Tok::Star, col));
                chars.next();
            }
            _ => {
                let start = i;
                let mut end = s.len();
                while let Some(&(j, d)) = chars.peek() {
                    if d.is_whitespace() || matches!(d, '+' | '-' | '*') {
                        end = j;
                        break;
                    }
                    chars.next();
                }
                out.push((Tok::Word(&s[start..end]), col));
            }
        }
    }
    out
}

/// A term as written: sign and coefficient folded, names with columns.
struct RawTerm {
    coeff: i128,
    names: Vec<(String, usize)>,
    column: usize,
}

fn parse_terms(s: &str, line: usize, offset: usize) -> Result<Vec<RawTerm>, ParseError> {
    let toks = lex(s, offset);
    let end_col = offset + s.chars().count();
    let mut i = 0;
    let mut terms = Vec::new();
    loop {
        let mut sign = 1i128;
        let first = terms.is_empty();
        match toks.get(i) {
            Some((Tok::Plus, _)) if !first => i += 1,
            Some((Tok::Minus, _)) => {
                sign = -1;
                i += 1;
            }
            Some((_, c)) if !first => return Err(err(line, *c, "expected `+` or `-` between terms")),
            None if first => return Err(err(line, end_col, "expected a term")),
            _ => {}
        }
        let column = toks.get(i).map_or(end_col, |t| t.1);
        let mut coeff = sign;
        let mut names = Vec::new();
        match toks.get(i) {
            Some((Tok::Word(w), c)) if w.chars().all(|ch| ch.is_ascii_digit()) => {
                let v: i128 = w.parse().map_err(|_| err(line, *c, "coefficient out of range"))?;
                coeff *= v;
                i += 1;
                match toks.get(i) {
                    Some((Tok::Star, _)) => i += 1,
                    Some((_, c)) => return Err(err(line, *c, "expected `*` after a coefficient")),
                    None => return Err(err(line, end_col, "a coefficient must be followed by `*name`")),
                }
            }
            _ => {}
        }
        loop {
            match toks.get(i) {
                Some((Tok::Word(w), c)) => {
                    if !is_symbol_name(w) {
                        return Err(err(line, *c, format!("`{w}` is not a valid name")));
                    }
                    names.push((w.to_string(), *c));
                    i += 1;
                }
                Some((_, c)) => return Err(err(line, *c, "expected a name")),
                None => return Err(err(line, end_col, "expected a name")),
            }
            match toks.get(i) {
                Some((Tok::Star, _)) => i += 1,
                _ => break,
            }
        }
        terms.push(RawTerm { coeff, names, column });
        if i >= toks.len() {
            return Ok(terms);
        }
    }
}

/// Merges equal words, reduces coefficients and drops zeros, keeping first-occurrence order.
fn normalise(field: PrimeField, raw: Vec<(i128, Vec<String>)>) -> Vec<Term> {
    let p = field.characteristic() as i128;
    let mut order: Vec<Vec<String>> = Vec::new();
    let mut sums: HashMap<Vec<String>, i128> = HashMap::new();
    for (c, w) in raw {
        let e = sums.entry(w.clone()).or_insert_with(|| {
            order.push(w);
            0
        });
        *e = (*e + c.rem_euclid(p)) % p;
    }
    order
        .into_iter()
        .filter_map(|w| {
            let c = sums[&w] as u32;
            (c != 0).then_some(Term { coeff: c, word: w })
        })
        .collect()
}

#[derive(Clone, Copy)]
struct Arrow {
    source: usize,
    target: usize,
}

#[derive(Default)]
struct Parser {
    field: Option<(u32, usize)>,
    vertices: Vec<String>,
    vertex_index: HashMap<String, usize>,
    vertices_line: Option<usize>,
    arrows: Vec<ArrowDecl>,
    arrow_index: HashMap<String, Arrow>,
    relations: Vec<(usize, Vec<RawTerm>)>,
    order: Option<(usize, Vec<(String, usize)>)>,
    bounds: Option<(usize, usize)>,
    modules: Vec<(usize, ModuleDraft)>,
}

struct ModuleDraft {
    name: String,
    generators: Vec<GeneratorDecl>,
    generator_index: HashMap<String, usize>,
    rows: Vec<(usize, Vec<RawTerm>)>,
}

/// Words of a line with their 1-based columns.
fn words(line: &str) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((&line[s..i], line[..s].chars().count() + 1));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((&line[s..], line[..s].chars().count() + 1));
    }
    out
}

fn parse_usize(word: (&str, usize), line: usize, what: &str) -> Result<usize, ParseError> {
    word.0.parse().map_err(|_| err(line, word.1, format!("expected {what}, found `{}`", word.0)))
}

impl Parser {
    fn run(mut self, text: &str, char_override: Option<u32>) -> Result<InputDocument, ParseError> {
        let mut open: Option<(usize, ModuleDraft)> = None;
        for (idx, full) in text.lines().enumerate() {
            let ln = idx + 1;
            let line = full.split('#').next().unwrap_or("");
            let w = words(line);
            let Some(&(kw, kw_col)) = w.first() else {
                continue;
            };
            let rest_col = kw_col + kw.chars().count();
            let rest: &str = &line[line.char_indices().nth(rest_col - 1).map_or(line.len(), |(i, _)| i)..];
            if let Some((_, m)) = open.as_mut() {
                match kw {
                    "generator" => self.generator(m, &w, ln)?,
                    "row" => m.rows.push((ln, parse_terms(rest, ln, rest_col)?)),
                    "end" => {
                        if w.len() > 1 {
                            return Err(err(ln, w[1].1, "unexpected text after `end`"));
                        }
                        self.modules.push(open.take().unwrap());
                    }
                    _ => return Err(err(ln, kw_col, format!("`{kw}` is not allowed inside a module block"))),
                }
                continue;
            }
            match kw {
                "field" => {
                    if w.len() != 2 {
                        return Err(err(ln, kw_col, "expected `field <prime>`"));
                    }
                    if self.field.is_some() {
                        return Err(err(ln, kw_col, "field declared twice"));
                    }
                    let p: u32 = w[1].0.parse().map_err(|_| err(ln, w[1].1, "expected a prime"))?;
                    PrimeField::new(p).map_err(|e| err(ln, w[1].1, e.to_string()))?;
                    self.field = Some((p, ln));
                }
                "vertices" => {
                    if self.vertices_line.is_some() {
                        return Err(err(ln, kw_col, "vertices declared twice"));
                    }
                    if w.len() < 2 {
                        return Err(err(ln, kw_col, "expected at least one vertex"));
                    }
                    for &(v, c) in &w[1..] {
                        if !is_name(v) {
                            return Err(err(ln, c, format!("`{v}` is not a valid vertex name")));
                        }
                        if self.vertex_index.insert(v.to_string(), self.vertices.len()).is_some() {
                            return Err(err(ln, c, format!("duplicate vertex {v}")));
                        }
                        self.vertices.push(v.to_string());
                    }
                    self.vertices_line = Some(ln);
                }
                "arrow" => self.arrow(&w, ln)?,
                "relation" => self.relations.push((ln, parse_terms(rest, ln, rest_col)?)),
                "order" => {
                    if self.order.is_some() {
                        return Err(err(ln, kw_col, "order declared twice"));
                    }
                    self.order = Some((ln, w[1..].iter().map(|&(s, c)| (s.to_string(), c)).collect()));
                }
                "bounds" => {
                    if w.len() != 3 {
                        return Err(err(ln, kw_col, "expected `bounds <max-hdeg> <max-ideg>`"));
                    }
                    if self.bounds.is_some() {
                        return Err(err(ln, kw_col, "bounds declared twice"));
                    }
                    let n = parse_usize(w[1], ln, "a homological degree")?;
                    let d = parse_usize(w[2], ln, "an internal degree")?;
                    if d < 2 {
                        return Err(err(ln, w[2].1, "the internal degree bound must be at least 2"));
                    }
                    self.bounds = Some((n, d));
                }
                "module" => {
                    if w.len() != 2 || !is_symbol_name(w[1].0) {
                        return Err(err(ln, kw_col, "expected `module <name>`"));
                    }
                    if self.modules.iter().any(|(_, m)| m.name == w[1].0) {
                        return Err(err(ln, w[1].1, format!("duplicate module {}", w[1].0)));
                    }
                    open = Some((
                        ln,
                        ModuleDraft {
                            name: w[1].0.to_string(),
                            generators: Vec::new(),
                            generator_index: HashMap::new(),
                            rows: Vec::new(),
                        },
                    ));
                }
                "generator" | "row" | "end" => {
                    return Err(err(ln, kw_col, format!("`{kw}` outside a module block")));
                }
                _ => return Err(err(ln, kw_col, format!("unknown declaration `{kw}`"))),
            }
        }
        if let Some((ln, m)) = open {
            return Err(err(ln, 1, format!("module {} is missing `end`", m.name)));
        }
        if self.vertices_line.is_none() {
            return Err(err(1, 1, "missing `vertices` declaration"));
        }
        let p = char_override.unwrap_or(self.field.map_or(DEFAULT_CHAR, |f| f.0));
        let field = PrimeField::new(p).map_err(|e| err(self.field.map_or(1, |f| f.1), 1, e.to_string()))?;
        self.finish(field)
    }

    fn arrow(&mut self, w: &[(&str, usize)], ln: usize) -> Result<(), ParseError> {
        let shape = w.len() == 6 && w[2].0 == ":" && w[4].0 == "->";
        if !shape {
            return Err(err(ln, w[0].1, "expected `arrow <name> : <source> -> <target>`"));
        }
        let (name, c) = w[1];
        if !is_symbol_name(name) {
            return Err(err(ln, c, format!("`{name}` is not a valid arrow name (digits only are reserved for coefficients)")));
        }
        if self.arrow_index.contains_key(name) {
            return Err(err(ln, c, format!("duplicate arrow {name}")));
        }
        let vertex = |(v, c): (&str, usize)| {
            self.vertex_index.get(v).copied().ok_or_else(|| err(ln, c, format!("unknown vertex {v}")))
        };
        let (source, target) = (vertex(w[3])?, vertex(w[5])?);
        self.arrow_index.insert(name.to_string(), Arrow { source, target });
        self.arrows.push(ArrowDecl { name: name.to_string(), source: w[3].0.to_string(), target: w[5].0.to_string() });
        Ok(())
    }

    fn generator(&self, m: &mut ModuleDraft, w: &[(&str, usize)], ln: usize) -> Result<(), ParseError> {
        let shape = w.len() == 6 && w[2].0 == ":" && w[4].0 == "@";
        if !shape {
            return Err(err(ln, w[0].1, "expected `generator <name> : <vertex> @ <degree>`"));
        }
        let (name, c) = w[1];
        if !is_symbol_name(name) {
            return Err(err(ln, c, format!("`{name}` is not a valid generator name")));
        }
        if !self.vertex_index.contains_key(w[3].0) {
            return Err(err(ln, w[3].1, format!("unknown vertex {}", w[3].0)));
        }
        let degree = parse_usize(w[5], ln, "a degree")?;
        if m.generator_index.insert(name.to_string(), m.generators.len()).is_some() {
            return Err(err(ln, c, format!("duplicate generator {name}")));
        }
        m.generators.push(GeneratorDecl { name: name.to_string(), vertex: w[3].0.to_string(), degree });
        Ok(())
    }

    /// Checks a path of arrow names, returning `(source, target, length)`.
    fn walk(&self, names: &[(String, usize)], start: Option<usize>, ln: usize) -> Result<(Option<usize>, Option<usize>), ParseError> {
        let mut first = start;
        let mut at = start;
        for (name, c) in names {
            let a = self.arrow_index.get(name).ok_or_else(|| err(ln, *c, format!("unknown arrow {name}")))?;
            if let Some(v) = at {
                if v != a.source {
                    return Err(err(ln, *c, format!("arrow {name} does not start where the path so far ends")));
                }
            }
            first.get_or_insert(a.source);
            at = Some(a.target);
        }
        Ok((first, at))
    }

    fn finish(self, field: PrimeField) -> Result<InputDocument, ParseError> {
        let mut relations = Vec::new();
        for (ln, raw) in &self.relations {
            let mut shape: Option<(usize, usize, usize)> = None;
            let mut collected = Vec::new();
            for t in raw {
                let (s, e) = self.walk(&t.names, None, *ln)?;
                let here = (s.unwrap(), e.unwrap(), t.names.len());
                match shape {
                    None => shape = Some(here),
                    Some(x) if x.2 != here.2 => {
                        return Err(err(*ln, t.column, "relation is not homogeneous"));
                    }
                    Some(x) if (x.0, x.1) != (here.0, here.1) => {
                        return Err(err(*ln, t.column, "terms of a relation must share source and target"));
                    }
                    _ => {}
                }
                collected.push((t.coeff, t.names.iter().map(|n| n.0.clone()).collect()));
            }
            if shape.is_some_and(|s| s.2 < 2) {
                return Err(err(*ln, raw[0].column, "relations must have degree at least 2"));
            }
            let terms = normalise(field, collected);
            if terms.is_empty() {
                return Err(err(*ln, raw[0].column, "relation is zero"));
            }
            relations.push(terms);
        }

        let order = match &self.order {
            None => None,
            Some((ln, names)) => {
                let mut seen = BTreeMap::new();
                for (n, c) in names {
                    if !self.arrow_index.contains_key(n) {
                        return Err(err(*ln, *c, format!("unknown arrow {n}")));
                    }
                    if seen.insert(n.clone(), ()).is_some() {
                        return Err(err(*ln, *c, format!("arrow {n} listed twice")));
                    }
                }
                if seen.len() != self.arrows.len() {
                    return Err(err(*ln, 1, "order must list every arrow exactly once"));
                }
                Some(names.iter().map(|n| n.0.clone()).collect())
            }
        };

        let mut modules = Vec::new();
        for (_, m) in &self.modules {
            let mut rows = Vec::new();
            for (ln, raw) in &m.rows {
                let mut shape: Option<(usize, usize)> = None;
                let mut collected = Vec::new();
                for t in raw {
                    let (g, c) = &t.names[0];
                    let gi = *m.generator_index.get(g).ok_or_else(|| err(*ln, *c, format!("unknown generator {g}")))?;
                    let gen = &m.generators[gi];
                    let v = self.vertex_index[&gen.vertex];
                    let (_, end) = self.walk(&t.names[1..], Some(v), *ln)?;
                    let here = (gen.degree + t.names.len() - 1, end.unwrap());
                    match shape {
                        None => shape = Some(here),
                        Some(x) if x.0 != here.0 => return Err(err(*ln, t.column, "row is not homogeneous")),
                        Some(x) if x.1 != here.1 => {
                            return Err(err(*ln, t.column, "terms of a row must end at the same vertex"))
                        }
                        _ => {}
                    }
                    collected.push((t.coeff, t.names.iter().map(|n| n.0.clone()).collect()));
                }
                let terms = normalise(field, collected);
                if terms.is_empty() {
                    return Err(err(*ln, raw[0].column, "row is zero"));
                }
                rows.push(terms);
            }
            modules.push(ModuleDecl { name: m.name.clone(), generators: m.generators.clone(), rows });
        }

        Ok(InputDocument {
            field: field.characteristic(),
            vertices: self.vertices,
            arrows: self.arrows,
            relations,
            order,
            bounds: self.bounds,
            modules,
        })
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, p: u32, terms: &[Term]) -> fmt::Result {
    for (i, t) in terms.iter().enumerate() {
        let neg = t.coeff > p / 2;
        let c = if neg { p - t.coeff } else { t.coeff };
        match (i, neg) {
            (0, false) => {}
            (0, true) => f.write_str("-")?,
            (_, false) => f.write_str(" + ")?,
            (_, true) => f.write_str(" - ")?,
        }
        if c != 1 {
            write!(f, "{c}*")?;
        }
        f.write_str(&t.word.join("*"))?;
    }
    Ok(())
}

/// Canonical text; parsing it gives back the same document.
impl fmt::Display for InputDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field {}", self.field)?;
        writeln!(f, "vertices {}", self.vertices.join(" "))?;
        for a in &self.arrows {
            writeln!(f, "arrow {} : {} -> {}", a.name, a.source, a.target)?;
        }
        for r in &self.relations {
            f.write_str("relation ")?;
            write_terms(f, self.field, r)?;
            writeln!(f)?;
        }
        if let Some(o) = &self.order {
            writeln!(f, "order {}", o.join(" "))?;
        }
        if let Some((n, d)) = self.bounds {
            writeln!(f, "bounds {n} {d}")?;
        }
        for m in &self.modules {
            writeln!(f, "module {}", m.name)?;
            for g in &m.generators {
                writeln!(f, "  generator {} : {} @ {}", g.name, g.vertex, g.degree)?;
            }
            for r in &m.rows {
                f.write_str("  row ")?;
                write_terms(f, self.field, r)?;
                writeln!(f)?;
            }
            writeln!(f, "end")?;
        }
        Ok(())
    }
}

impl InputDocument {
    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.field).expect("validated while parsing")
    }

    pub fn quiver(&self) -> Quiver {
        let arrows: Vec<(&str, &str, &str)> =
            self.arrows.iter().map(|a| (a.name.as_str(), a.source.as_str(), a.target.as_str())).collect();
        let vertices: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        Quiver::new(&vertices, &arrows).expect("validated while parsing")
    }

    fn element(q: &Quiver, terms: &[Term]) -> AlgebraElement {
        AlgebraElement::from_raw_terms(terms.iter().map(|t| {
            let labels: Vec<&str> = t.word.iter().map(String::as_str).collect();
            (q.path(&labels).expect("validated while parsing"), t.coeff)
        }))
    }

    pub fn presentation(&self) -> QuiverPresentation {
        let q = self.quiver();
        let relations = self.relations.iter().map(|r| Self::element(&q, r)).collect();
        QuiverPresentation::new(q, relations, self.field())
    }

    pub fn monomial_order(&self) -> MonomialOrder {
        match &self.order {
            None => MonomialOrder::declaration(self.arrows.len()),
            Some(o) => {
                let labels: Vec<&str> = o.iter().map(String::as_str).collect();
                MonomialOrder::from_labels(&self.quiver(), &labels).expect("validated while parsing")
            }
        }
    }

    pub fn module(&self, name: &str) -> Option<&ModuleDecl> {
        self.modules.iter().find(|m| m.name == name)
    }

    /// Presentation of a declared module over `alg`, with rows reduced through `gb`.
    pub fn module_presentation(
        &self,
        decl: &ModuleDecl,
        gb: &GroebnerBasis,
        alg: &GradedAlgebra,
    ) -> pkoszul::Result<ModulePresentation> {
        let q = self.quiver();
        let vertex = |v: &str| q.vertex(v).expect("validated while parsing");
        let index: HashMap<&str, usize> = decl.generators.iter().enumerate().map(|(i, g)| (g.name.as_str(), i)).collect();
        let target =
            FreeModule::new(decl.generators.iter().map(|g| Generator { vertex: vertex(&g.vertex), degree: g.degree }).collect());
        let mut sources = Vec::new();
        let mut images = Vec::new();
        for row in &decl.rows {
            let g0 = &target.generators[index[row[0].word[0].as_str()]];
            let degree = g0.degree + row[0].word.len() - 1;
            if degree > alg.max_degree() {
                return Err(pkoszul::Error::input(format!(
                    "module {} has a row in degree {degree}, above the internal degree bound {}",
                    decl.name,
                    alg.max_degree()
                )));
            }
            let end = match row[0].word.len() {
                1 => g0.vertex,
                _ => q.arrow(q.arrow_id(row[0].word.last().unwrap()).unwrap()).target,
            };
            let slice = target.slice(alg, degree, end);
            let mut v = vec![0u32; slice.len()];
            for t in row {
                let g = index[t.word[0].as_str()];
                let gv = target.generators[g].vertex;
                let k = degree - target.generators[g].degree;
                let coords = if k == 0 {
                    vec![(alg.words_between(0, gv, gv)[0] as u32, 1)]
                } else {
                    let labels: Vec<&str> = t.word[1..].iter().map(String::as_str).collect();
                    coordinates(gb, alg, &AlgebraElement::from_path(q.path(&labels).expect("validated")))?.1
                };
                for (w, c) in coords {
                    let pos = slice.position(alg, &target, g, w as usize);
                    v[pos] = alg.field().mul_add(v[pos], t.coeff, c);
                }
            }
            sources.push(Generator { vertex: end, degree });
            images.push(v);
        }
        Ok(ModulePresentation::new(ModuleMap::new(alg, FreeModule::new(sources), target, images)?))
    }
}
