//! Parsers for the plain-text data files shipped under `fixtures/`: the
//! published profile tables, clique representatives, adjacency matrices,
//! automorphism lists, orbit tables and the closed-form automorphism action.
//! Nothing here is hard-coded into the algorithms; the engine recomputes all
//! of it and the checkers compare.

use crate::autgroup::VertexPerm;
use crate::combination::Combination;
use crate::error::{Error, Result};
use crate::interval::{Box3, Interval};
use crate::level::Level;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

fn ferr(name: &str, msg: impl Into<String>) -> Error {
    Error::Fixture {
        name: name.to_string(),
        msg: msg.into(),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| ferr(&path.display().to_string(), format!("cannot read: {e}")))
}

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Endpoint written as `a` or `a/2`, returned in doubled units.
fn parse_endpoint(tok: &str, name: &str) -> Result<i32> {
    if let Some(num) = tok.strip_suffix("/2") {
        num.parse::<i32>()
            .map_err(|_| ferr(name, format!("bad endpoint {tok}")))
    } else {
        tok.parse::<i32>()
            .map(|x| 2 * x)
            .map_err(|_| ferr(name, format!("bad endpoint {tok}")))
    }
}

/// A clique file: one box per line, six endpoints (lo hi per axis).
pub fn parse_clique(text: &str, name: &str) -> Result<Vec<Box3>> {
    let mut out = Vec::new();
    for line in data_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 6 {
            return Err(ferr(name, format!("expected 6 endpoints, got {line}")));
        }
        let mut ends = [0i32; 6];
        for (i, t) in toks.iter().enumerate() {
            ends[i] = parse_endpoint(t, name)?;
        }
        out.push(Box3::new(
            Interval::from_doubled(ends[0], ends[1])?,
            Interval::from_doubled(ends[2], ends[3])?,
            Interval::from_doubled(ends[4], ends[5])?,
        ));
    }
    Ok(out)
}

/// An adjacency matrix file: rows of touching-pattern codes.
pub fn parse_matrix(text: &str, name: &str) -> Result<Vec<Vec<u8>>> {
    let mut out = Vec::new();
    for line in data_lines(text) {
        let row: std::result::Result<Vec<u8>, _> = line
            .split_whitespace()
            .map(|t| t.parse::<u8>())
            .collect();
        out.push(row.map_err(|_| ferr(name, format!("bad row {line}")))?);
    }
    if out.iter().any(|r| r.len() != out.len()) {
        return Err(ferr(name, "matrix is not square"));
    }
    Ok(out)
}

/// Permutations in cycle notation on 1-based member indices, one per line.
/// Returned as 0-based image vectors of length `n`.
pub fn parse_permutations(text: &str, n: usize, name: &str) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for line in data_lines(text) {
        let mut images: Vec<usize> = (0..n).collect();
        let body = line.replace(' ', "");
        let mut rest = body.as_str();
        while let Some(open) = rest.find('(') {
            let close = rest[open..]
                .find(')')
                .ok_or_else(|| ferr(name, format!("unbalanced cycle in {line}")))?
                + open;
            let cycle: std::result::Result<Vec<usize>, _> = rest[open + 1..close]
                .split(',')
                .map(|t| t.parse::<usize>())
                .collect();
            let cycle = cycle.map_err(|_| ferr(name, format!("bad cycle in {line}")))?;
            for w in 0..cycle.len() {
                let from = cycle[w] - 1;
                let to = cycle[(w + 1) % cycle.len()] - 1;
                if from >= n || to >= n {
                    return Err(ferr(name, format!("index out of range in {line}")));
                }
                images[from] = to;
            }
            rest = &rest[close + 1..];
        }
        out.push(images);
    }
    Ok(out)
}

/// One profile table: interval columns, count rows, published edge count
/// and the type-II prime marker.
#[derive(Debug, Clone)]
pub struct ProfileTable {
    pub s: u32,
    pub v: u32,
    pub columns: Vec<Interval>,
    pub rows: Vec<ProfileRow>,
}

#[derive(Debug, Clone)]
pub struct ProfileRow {
    pub counts: Vec<u32>,
    pub e: u64,
    pub type_ii: bool,
}

impl ProfileRow {
    pub fn combination(&self, columns: &[Interval]) -> Combination<Interval> {
        columns
            .iter()
            .zip(&self.counts)
            .filter(|(_, &k)| k > 0)
            .map(|(&iv, &k)| (iv, k))
            .collect()
    }
}

pub fn parse_profile_table(text: &str, s: u32, v: u32, name: &str) -> Result<ProfileTable> {
    let mut columns = Vec::new();
    let mut rows = Vec::new();
    for line in data_lines(text) {
        if let Some(cols) = line.strip_prefix("columns:") {
            for tok in cols.split_whitespace() {
                let (a, b) = tok
                    .split_once(':')
                    .ok_or_else(|| ferr(name, format!("bad column {tok}")))?;
                columns.push(Interval::new(
                    a.parse().map_err(|_| ferr(name, "bad column"))?,
                    b.parse().map_err(|_| ferr(name, "bad column"))?,
                ));
            }
            continue;
        }
        let (countpart, epart) = line
            .split_once("e=")
            .ok_or_else(|| ferr(name, format!("missing edge count in {line}")))?;
        let counts: std::result::Result<Vec<u32>, _> = countpart
            .split_whitespace()
            .map(|t| t.parse::<u32>())
            .collect();
        let counts = counts.map_err(|_| ferr(name, format!("bad counts in {line}")))?;
        if counts.len() != columns.len() {
            return Err(ferr(name, format!("row width mismatch in {line}")));
        }
        let type_ii = epart.ends_with('\'');
        let e: u64 = epart
            .trim_end_matches('\'')
            .trim()
            .parse()
            .map_err(|_| ferr(name, format!("bad edge count in {line}")))?;
        rows.push(ProfileRow { counts, e, type_ii });
    }
    Ok(ProfileTable { s, v, columns, rows })
}

/// A row of an orbit table: digit-labelled boxes, orbit length, chirality.
#[derive(Debug, Clone)]
pub struct OrbitRow {
    pub no: usize,
    pub length: usize,
    pub labels: Vec<String>,
    pub achiral: bool,
    /// rows in one block form a single full-isometry orbit
    pub block: usize,
    /// equivalence-class section of the table
    pub class: usize,
}

pub fn parse_orbit_table(text: &str, name: &str) -> Result<Vec<OrbitRow>> {
    let mut out = Vec::new();
    let mut block = 0usize;
    let mut class = 0usize;
    for line in data_lines(text) {
        if line == "---" {
            block += 1;
            continue;
        }
        if line == "===" {
            class += 1;
            continue;
        }
        let mut toks: Vec<&str> = line.split_whitespace().collect();
        let achiral = toks.last() == Some(&"*");
        if achiral {
            toks.pop();
        }
        if toks.len() != 14 {
            return Err(ferr(name, format!("expected 14 fields, got {line}")));
        }
        out.push(OrbitRow {
            no: toks[0].parse().map_err(|_| ferr(name, "bad row number"))?,
            length: toks[1].parse().map_err(|_| ferr(name, "bad length"))?,
            labels: toks[2..].iter().map(|s| s.to_string()).collect(),
            achiral,
            block,
            class,
        });
    }
    Ok(out)
}

pub fn parse_labelings(text: &str, name: &str) -> Result<Vec<[u8; 5]>> {
    let mut out = Vec::new();
    for line in data_lines(text) {
        let digits: Vec<u8> = line
            .chars()
            .filter_map(|c| c.to_digit(10).map(|d| d as u8))
            .collect();
        let arr: [u8; 5] = digits
            .try_into()
            .map_err(|_| ferr(name, format!("bad labeling {line}")))?;
        out.push(arr);
    }
    Ok(out)
}

/// Affine expression in i, j, s (e.g. `s+1-i`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Affine {
    pub constant: i32,
    pub ci: i32,
    pub cj: i32,
    pub cs: i32,
}

impl Affine {
    fn parse(tok: &str, name: &str) -> Result<Affine> {
        let mut out = Affine {
            constant: 0,
            ci: 0,
            cj: 0,
            cs: 0,
        };
        let mut sign = 1i32;
        let mut cur = String::new();
        let flush = |cur: &mut String, sign: i32, out: &mut Affine| -> Result<()> {
            if cur.is_empty() {
                return Ok(());
            }
            match cur.as_str() {
                "i" => out.ci += sign,
                "j" => out.cj += sign,
                "s" => out.cs += sign,
                t => {
                    out.constant += sign
                        * t.parse::<i32>()
                            .map_err(|_| ferr("aut action", format!("bad term {t}")))?
                }
            }
            cur.clear();
            Ok(())
        };
        for ch in tok.chars() {
            match ch {
                '+' => {
                    flush(&mut cur, sign, &mut out)?;
                    sign = 1;
                }
                '-' => {
                    flush(&mut cur, sign, &mut out)?;
                    sign = -1;
                }
                c if c.is_ascii_alphanumeric() => cur.push(c),
                _ => return Err(ferr(name, format!("bad expression {tok}"))),
            }
        }
        flush(&mut cur, sign, &mut out)?;
        Ok(out)
    }

    pub fn eval(&self, i: i32, j: i32, s: i32) -> i32 {
        self.constant + self.ci * i + self.cj * j + self.cs * s
    }
}

/// The closed-form automorphism action for levels `s ≥ 4`: images of the
/// eight distinguished vertices, plus symbolic rules for the five vertex
/// categories `[1,i]`, `[2,i]`, `[j,s−1]`, `[j,s]`, `[i,j]`.
#[derive(Debug, Clone)]
pub struct AutActionTable {
    /// `h[k][p]` = letter index of the image of distinguished vertex `p`
    pub h: Vec<Vec<usize>>,
    /// `g[k][cat]` = interval rule (pair of affine endpoint expressions)
    pub g: Vec<Vec<(Affine, Affine)>>,
}

pub fn parse_aut_action(text: &str, name: &str) -> Result<AutActionTable> {
    let letters = "abcduvwx";
    let mut h = vec![Vec::new(); 8];
    let mut g = vec![Vec::new(); 8];
    for line in data_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.first() {
            Some(&"H") => {
                let k: usize = toks[1].parse().map_err(|_| ferr(name, "bad H row"))?;
                if toks.len() != 10 {
                    return Err(ferr(name, "H row needs 8 letters"));
                }
                h[k - 1] = toks[2..]
                    .iter()
                    .map(|t| {
                        letters
                            .find(t.chars().next().unwrap_or('?'))
                            .ok_or_else(|| ferr(name, format!("bad letter {t}")))
                    })
                    .collect::<Result<Vec<usize>>>()?;
            }
            Some(&"G") => {
                let k: usize = toks[1].parse().map_err(|_| ferr(name, "bad G row"))?;
                if toks.len() != 7 {
                    return Err(ferr(name, "G row needs 5 rules"));
                }
                for rule in &toks[2..] {
                    let (lo, hi) = rule
                        .split_once(':')
                        .ok_or_else(|| ferr(name, format!("bad rule {rule}")))?;
                    g[k - 1].push((Affine::parse(lo, name)?, Affine::parse(hi, name)?));
                }
            }
            _ => return Err(ferr(name, format!("unrecognized line {line}"))),
        }
    }
    Ok(AutActionTable { h, g })
}

impl AutActionTable {
    /// Distinguished vertices for a given level, in letter order a..x.
    fn special_vertices(s: i32) -> [Interval; 8] {
        [
            Interval::new(0, 1),
            Interval::new(1, 2),
            Interval::new(s - 1, s),
            Interval::new(s, s + 1),
            Interval::new(2, s - 1),
            Interval::new(1, s - 1),
            Interval::new(2, s),
            Interval::new(1, s),
        ]
    }

    /// Build the eight closed-form automorphisms at level `s ≥ 4`.
    pub fn instantiate(&self, level: &Level) -> Result<Vec<VertexPerm>> {
        let s = level.s() as i32;
        if s < 4 {
            return Err(Error::LevelOutOfRange {
                s: level.s(),
                min: 4,
                max: crate::level::MAX_LEVEL,
            });
        }
        let special = Self::special_vertices(s);
        let mut out = Vec::new();
        for k in 0..8 {
            let mut map: BTreeMap<Interval, Interval> = BTreeMap::new();
            for (p, &src) in special.iter().enumerate() {
                map.insert(src, special[self.h[k][p]]);
            }
            for &iv in level.intervals() {
                if map.contains_key(&iv) {
                    continue;
                }
                let (a, b) = iv.as_integer().expect("integral level");
                // category and the (i, j) pair feeding the rule
                let (cat, i, j) = if a == 1 {
                    (0, b, 0)
                } else if a == 2 {
                    (1, b, 0)
                } else if b == s - 1 {
                    (2, 0, a)
                } else if b == s {
                    (3, 0, a)
                } else {
                    (4, a, b)
                };
                let (lo, hi) = &self.g[k][cat];
                let img = Interval::new(lo.eval(i, j, s), hi.eval(i, j, s));
                map.insert(iv, img);
            }
            out.push(VertexPerm::from_map(level, &map)?);
        }
        Ok(out)
    }
}

/// Loader for the whole fixture directory.
pub struct FixtureSet {
    pub dir: PathBuf,
}

impl FixtureSet {
    pub fn new(dir: impl Into<PathBuf>) -> FixtureSet {
        FixtureSet { dir: dir.into() }
    }

    fn load(&self, rel: &str) -> Result<String> {
        read(&self.dir.join(rel))
    }

    pub fn example_clique(&self) -> Result<Vec<Box3>> {
        parse_clique(&self.load("example_clique.txt")?, "example_clique")
    }

    pub fn clique(&self, name: &str) -> Result<Vec<Box3>> {
        parse_clique(&self.load(&format!("clique_{name}.txt"))?, name)
    }

    pub fn adjacency(&self, name: &str) -> Result<Vec<Vec<u8>>> {
        parse_matrix(&self.load(&format!("adjacency_{name}.txt"))?, name)
    }

    pub fn automorphism_list(&self, name: &str) -> Result<Vec<Vec<usize>>> {
        parse_permutations(&self.load(&format!("aut_{name}.txt"))?, 12, name)
    }

    pub fn orbit_table(&self, name: &str) -> Result<Vec<OrbitRow>> {
        parse_orbit_table(&self.load(&format!("orbit_table_{name}.txt"))?, name)
    }

    pub fn labelings(&self) -> Result<Vec<[u8; 5]>> {
        parse_labelings(&self.load("labelings.txt")?, "labelings")
    }

    pub fn profile_table(&self, s: u32, v: u32) -> Result<ProfileTable> {
        let name = format!("appendix_b/l_s{s}_v{v}.txt");
        parse_profile_table(&self.load(&name)?, s, v, &name)
    }

    pub fn profile_tables(&self) -> Result<Vec<ProfileTable>> {
        let mut out = Vec::new();
        for v in [12u32, 13] {
            for s in 3..=9u32 {
                if self.dir.join(format!("appendix_b/l_s{s}_v{v}.txt")).exists() {
                    out.push(self.profile_table(s, v)?);
                }
            }
        }
        Ok(out)
    }

    pub fn aut_action(&self) -> Result<AutActionTable> {
        parse_aut_action(&self.load("aut_action.txt")?, "aut_action")
    }
}

#[cfg(test)]
pub fn test_fixtures() -> FixtureSet {
    FixtureSet::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures"))
}
