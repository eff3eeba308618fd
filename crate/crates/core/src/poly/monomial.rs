//! Monomials in the variables `x_1..x_n, y_1..y_n` and monomial orders.
//!
//! Variable `v < n` is `x_{v+1}`; variable `n + i` is `y_{i+1}`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn from_exps(exps: Vec<u16>) -> Self {
        Monomial { exps }
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[v] = 1;
        m
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial { exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect() }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Degree vector over the vertices: `x_i` and `y_i` both count towards
    /// vertex `i`.
    pub fn vertex_degree(&self) -> Vec<u16> {
        let n = self.exps.len() / 2;
        (0..n).map(|i| self.exps[i] + self.exps[n + i]).collect()
    }

    /// Fine multidegree: the vertex degrees followed by the number of `x`
    /// factors. Binomial edge ideals are homogeneous for it.
    pub fn multidegree(&self) -> Vec<u16> {
        let n = self.exps.len() / 2;
        let mut d = self.vertex_degree();
        d.push(self.exps[..n].iter().sum());
        d
    }

    pub fn render(&self) -> String {
        let n = self.exps.len() / 2;
        let mut parts = Vec::new();
        for (v, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = var_name(n, v);
            if e == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

pub fn var_name(n: usize, v: usize) -> String {
    if v < n {
        format!("x{}", v + 1)
    } else {
        format!("y{}", v - n + 1)
    }
}

/// Inverse of [`var_name`]: `x3` or `y1` to a variable index.
pub fn parse_var(name: &str, n: usize) -> Result<usize> {
    let name = name.trim();
    let bad = || Error::Spec(format!("`{name}` is not a variable x1..x{n}, y1..y{n}"));
    let (side, idx) = name.split_at(name.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
    let i: usize = idx.parse().map_err(|_| bad())?;
    if i == 0 || i > n {
        return Err(bad());
    }
    match side {
        "x" => Ok(i - 1),
        "y" => Ok(n + i - 1),
        _ => Err(bad()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderKind {
    Lex,
    DegRevLex,
    /// Consecutive blocks of the priority list with the given sizes,
    /// compared lexicographically block by block, degrevlex inside a block.
    Blocks(Vec<usize>),
}

/// A monomial order: a kind plus a priority list of variables, largest
/// first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub priority: Vec<usize>,
}

impl MonomialOrder {
    fn checked(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let nv = priority.len();
        let mut seen = vec![false; nv];
        for &v in &priority {
            if v >= nv || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Spec(format!("variable priority {priority:?} is not a permutation")));
            }
        }
        if let OrderKind::Blocks(sizes) = &kind {
            if sizes.iter().sum::<usize>() != nv || sizes.contains(&0) {
                return Err(Error::Spec(format!("block sizes {sizes:?} do not partition {nv} variables")));
            }
        }
        Ok(MonomialOrder { kind, priority })
    }

    /// Lex with `x_1 > ... > x_n > y_1 > ... > y_n`.
    pub fn lex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::Lex, priority: (0..nvars).collect() }
    }

    pub fn degrevlex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::DegRevLex, priority: (0..nvars).collect() }
    }

    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        Self::checked(kind, priority)
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    /// Parses `lex`, `degrevlex`, or `blocks:a,b,...` (block sizes over the
    /// default priority).
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        match text {
            "lex" => Ok(Self::lex(nvars)),
            "degrevlex" | "grevlex" => Ok(Self::degrevlex(nvars)),
            _ => {
                let sizes = text
                    .strip_prefix("blocks:")
                    .ok_or_else(|| Error::Spec(format!("unknown monomial order `{text}`")))?;
                let sizes = sizes
                    .split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| Error::Spec(format!("bad block sizes `{sizes}`: {e}")))?;
                Self::checked(OrderKind::Blocks(sizes), (0..nvars).collect())
            }
        }
    }

    pub fn describe(&self) -> String {
        let kind = match &self.kind {
            OrderKind::Lex => "lex".to_string(),
            OrderKind::DegRevLex => "degrevlex".to_string(),
            OrderKind::Blocks(s) => format!(
                "blocks:{}",
                s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            ),
        };
        let n = self.nvars() / 2;
        let pri: Vec<String> = self.priority.iter().map(|&v| var_name(n, v)).collect();
        format!("{kind}({})", pri.join(">"))
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match &self.kind {
            OrderKind::Lex => lex_cmp(&self.priority, a, b),
            OrderKind::DegRevLex => degrevlex_cmp(&self.priority, a, b),
            OrderKind::Blocks(sizes) => {
                let mut start = 0;
                for &s in sizes {
                    let block = &self.priority[start..start + s];
                    let o = degrevlex_cmp(block, a, b);
                    if o != Ordering::Equal {
                        return o;
                    }
                    start += s;
                }
                Ordering::Equal
            }
        }
    }
}

fn lex_cmp(pri: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    for &v in pri {
        match a.exps[v].cmp(&b.exps[v]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn degrevlex_cmp(vars: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    let da: u32 = vars.iter().map(|&v| a.exps[v] as u32).sum();
    let db: u32 = vars.iter().map(|&v| b.exps[v] as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for &v in vars.iter().rev() {
        match a.exps[v].cmp(&b.exps[v]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// All monomials of total degree `d` in `nvars` variables.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; nvars];
    fn rec(v: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if v + 1 == cur.len() {
            cur[v] = left as u16;
            out.push(Monomial::from_exps(cur.clone()));
            cur[v] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[v] = e as u16;
            rec(v + 1, left - e, cur, out);
        }
        cur[v] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}
