//! Named group constructors, recipe strings and the built-in corpus.

use std::path::Path;

use serde::Serialize;

use crate::arith::is_prime;
use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::groupfile::parse_group_file;
use crate::perm::Permutation;

fn invalid(msg: impl Into<String>) -> GroupError {
    GroupError::InvalidParameter(msg.into())
}

fn cycle_perm(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let cycle: Vec<usize> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[cycle]).expect("valid cycle")
}

pub fn cyclic(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(invalid("cyclic group needs n >= 1"));
    }
    PermGroup::new(n, vec![cycle_perm(n, 1..=n)])
}

/// Symmetries of the regular `n`-gon, order `2n`, on `n ≥ 3` points.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(invalid("dihedral group needs n >= 3"));
    }
    let images = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
    PermGroup::new(n, vec![cycle_perm(n, 1..=n), Permutation::from_images(images)?])
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    match n {
        0 => Err(invalid("symmetric group needs n >= 1")),
        1 => PermGroup::trivial(1),
        2 => PermGroup::new(2, vec![cycle_perm(2, [1, 2])]),
        _ => PermGroup::new(n, vec![cycle_perm(n, [1, 2]), cycle_perm(n, 1..=n)]),
    }
}

pub fn alternating(n: usize) -> Result<PermGroup> {
    match n {
        0 => Err(invalid("alternating group needs n >= 1")),
        1..=2 => PermGroup::trivial(n),
        _ => PermGroup::new(n, (3..=n).map(|k| cycle_perm(n, [1, 2, k])).collect()),
    }
}

/// The quaternion group on its 8 elements.
pub fn quaternion8() -> Result<PermGroup> {
    PermGroup::new(
        8,
        vec![
            Permutation::parse_cycles(8, "(1 2 4 7)(3 6 8 5)")?,
            Permutation::parse_cycles(8, "(1 3 4 8)(2 5 7 6)")?,
        ],
    )
}

pub fn elementary_abelian(p: usize, k: usize) -> Result<PermGroup> {
    if !is_prime(p as u64) || k == 0 {
        return Err(invalid(format!("elementary abelian needs prime p and k >= 1, got {p}, {k}")));
    }
    let degree = p * k;
    let gens = (0..k).map(|i| cycle_perm(degree, i * p + 1..=(i + 1) * p)).collect();
    PermGroup::new(degree, gens)
}

/// Direct product acting on the disjoint union of the two point sets.
pub fn direct_product(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    let (dg, dh) = (g.degree(), h.degree());
    let degree = dg + dh;
    let mut gens = Vec::new();
    for s in g.generators() {
        let images = s.images().iter().copied().chain(dg as u32..degree as u32).collect();
        gens.push(Permutation::from_images(images)?);
    }
    for s in h.generators() {
        let images = (0..dg as u32)
            .chain(s.images().iter().map(|&i| i + dg as u32))
            .collect();
        gens.push(Permutation::from_images(images)?);
    }
    PermGroup::new(degree, gens)
}

/// Right regular representation of a group given by its multiplication on
/// `0..size`, generated by the listed elements.
pub fn regular_representation(
    size: usize,
    mul: impl Fn(usize, usize) -> usize,
    generators: &[usize],
) -> Result<PermGroup> {
    let gens = generators
        .iter()
        .map(|&g| Permutation::from_images((0..size).map(|h| mul(h, g) as u32).collect()))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(size, gens)
}

fn mod_pow(base: usize, exp: usize, modulus: usize) -> usize {
    (0..exp).fold(1 % modulus, |acc, _| acc * base % modulus)
}

/// `C_n ⋊ C_m = ⟨x, y | x^n = y^m = 1, y x y⁻¹ = x^r⟩` in its regular
/// representation; requires `r^m ≡ 1 (mod n)`.
pub fn semidirect_cyclic(n: usize, m: usize, r: usize) -> Result<PermGroup> {
    if n == 0 || m == 0 || mod_pow(r, m, n) != 1 % n {
        return Err(invalid(format!("semidirect:{n}:{m}:{r} needs r^m = 1 mod n")));
    }
    // x^i y^j is encoded as i + n j.
    let mul = |a: usize, b: usize| {
        let (i, j) = (a % n, a / n);
        let (k, l) = (b % n, b / n);
        (i + k * mod_pow(r, j, n)) % n + n * ((j + l) % m)
    };
    regular_representation(n * m, mul, &[1 % (n * m), n % (n * m)])
}

type Matrix = Vec<Vec<usize>>;

fn apply(m: &Matrix, v: &[usize], p: usize) -> Vec<usize> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<usize>() % p)
        .collect()
}

fn vec_index(v: &[usize], p: usize) -> usize {
    v.iter().rev().fold(0, |acc, &x| acc * p + x)
}

fn index_vec(mut i: usize, p: usize, k: usize) -> Vec<usize> {
    (0..k)
        .map(|_| {
            let x = i % p;
            i /= p;
            x
        })
        .collect()
}

fn check_matrices(p: usize, k: usize, matrices: &[Matrix]) -> Result<()> {
    if !is_prime(p as u64) || k == 0 {
        return Err(invalid("vector space needs prime p and k >= 1"));
    }
    if matrices.iter().any(|m| m.len() != k || m.iter().any(|r| r.len() != k)) {
        return Err(invalid(format!("matrices must be {k}x{k}")));
    }
    Ok(())
}

/// Translations of `F_p^k` extended by the given linear maps, acting on the
/// `p^k` vectors.
pub fn affine(p: usize, k: usize, matrices: &[Matrix]) -> Result<PermGroup> {
    check_matrices(p, k, matrices)?;
    let size = p.pow(k as u32);
    let mut gens = Vec::new();
    for axis in 0..k {
        let images = (0..size)
            .map(|i| {
                let mut v = index_vec(i, p, k);
                v[axis] = (v[axis] + 1) % p;
                vec_index(&v, p) as u32
            })
            .collect();
        gens.push(Permutation::from_images(images)?);
    }
    for m in matrices {
        let images = (0..size)
            .map(|i| vec_index(&apply(m, &index_vec(i, p, k), p), p) as u32)
            .collect();
        gens.push(Permutation::from_images(images)?);
    }
    PermGroup::new(size, gens)
}

/// Matrix group acting on the `p^k − 1` nonzero vectors of `F_p^k`.
pub fn linear(p: usize, k: usize, matrices: &[Matrix]) -> Result<PermGroup> {
    check_matrices(p, k, matrices)?;
    if matrices.is_empty() {
        return Err(GroupError::NoGenerators);
    }
    let size = p.pow(k as u32);
    let gens = matrices
        .iter()
        .map(|m| {
            let images = (1..size)
                .map(|i| {
                    let img = vec_index(&apply(m, &index_vec(i, p, k), p), p);
                    img.checked_sub(1)
                        .map(|x| x as u32)
                        .ok_or_else(|| invalid("matrix is singular"))
                })
                .collect::<Result<Vec<_>>>()?;
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(size - 1, gens)
}

/// PSL(2,7) on the projective line over `F_7`: point 1 is ∞ and point
/// `j + 2` is `j`. Generated by `x ↦ x + 1` and `x ↦ −1/x`.
pub fn psl27() -> PermGroup {
    const INF: u32 = 0;
    let pt = |j: usize| (j + 1) as u32;
    let mut translate = vec![INF; 8];
    let mut invert = vec![INF; 8];
    invert[INF as usize] = pt(0);
    invert[pt(0) as usize] = INF;
    for j in 0..7 {
        translate[pt(j) as usize] = pt((j + 1) % 7);
        if j != 0 {
            let inv = (1..7).find(|y| j * y % 7 == 1).expect("F_7 is a field");
            invert[pt(j) as usize] = pt((7 - inv) % 7);
        }
    }
    let group = PermGroup::new(
        8,
        vec![
            Permutation::from_images(translate).expect("bijection"),
            Permutation::from_images(invert).expect("bijection"),
        ],
    )
    .expect("valid generators");
    assert_eq!(group.order(), 168, "PSL(2,7) has order 168");
    group
}

/// Matrix sending `a ↦ b` and `b ↦ ab` on `⟨a⟩ × ⟨b⟩ ≅ F_3²` (columns are images).
const PAPER72_MATRIX: [[usize; 2]; 2] = [[0, 1], [1, 1]];

fn mat_mul_f3(x: [[usize; 2]; 2], y: [[usize; 2]; 2]) -> [[usize; 2]; 2] {
    let mut out = [[0; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (x[i][0] * y[0][j] + x[i][1] * y[1][j]) % 3;
        }
    }
    out
}

/// Encodings of `a`, `b`, `c` in the multiplication used by [`paper72`].
const PAPER72_GENERATORS: [usize; 3] = [1, 3, 9 * 7];

/// `(C_3 × C_3) ⋊ C_8` in its regular representation of degree 72.
///
/// Elements are pairs `(v, i)` with `v ∈ F_3²`, `i mod 8`, encoded as
/// `v0 + 3 v1 + 9 i`, and `(v, i)(w, j) = (v + Mⁱ w, i + j)`. The generators
/// are `a = (e1, 0)`, `b = (e2, 0)` and `c = (0, −1)`, listed in that order,
/// which satisfy `a³ = b³ = c⁸ = 1`, `ab = ba`, `c⁻¹ a c = b` and `c⁻¹ b c = ab`.
pub fn paper72() -> PermGroup {
    let mut powers = vec![[[1, 0], [0, 1]]];
    for i in 1..8 {
        powers.push(mat_mul_f3(powers[i - 1], PAPER72_MATRIX));
    }
    let identity = [[1, 0], [0, 1]];
    assert!(powers[1..].iter().all(|m| *m != identity), "M has order 8");
    assert_eq!(mat_mul_f3(powers[7], PAPER72_MATRIX), identity, "M has order 8");

    let mul = |x: usize, y: usize| {
        let (v, i) = ([x % 3, x / 3 % 3], x / 9);
        let (w, j) = ([y % 3, y / 3 % 3], y / 9);
        let m = powers[i];
        let mw = [(m[0][0] * w[0] + m[0][1] * w[1]) % 3, (m[1][0] * w[0] + m[1][1] * w[1]) % 3];
        (v[0] + mw[0]) % 3 + 3 * ((v[1] + mw[1]) % 3) + 9 * ((i + j) % 8)
    };
    let group = regular_representation(72, mul, &PAPER72_GENERATORS).expect("valid construction");
    assert_eq!(group.order(), 72, "paper72 has order 72");
    group
}

fn parse_num(s: &str, what: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| invalid(format!("`{s}` is not a valid {what}")))
}

fn parse_matrices(spec: &str, k: usize) -> Result<Vec<Matrix>> {
    spec.split('/')
        .filter(|s| !s.trim().is_empty())
        .map(|m| {
            let entries = m
                .split(',')
                .map(|e| parse_num(e, "matrix entry"))
                .collect::<Result<Vec<_>>>()?;
            if entries.len() != k * k {
                return Err(invalid(format!("matrix `{m}` needs {} entries", k * k)));
            }
            Ok(entries.chunks(k).map(|r| r.to_vec()).collect())
        })
        .collect()
}

fn parse_factor(recipe: &str) -> Result<PermGroup> {
    let parts: Vec<&str> = recipe.trim().split(':').collect();
    let arg = |i: usize, what: &str| -> Result<usize> {
        parts
            .get(i)
            .ok_or_else(|| invalid(format!("recipe `{recipe}` is missing its {what}")))
            .and_then(|s| parse_num(s, what))
    };
    match parts[0] {
        "cyclic" => cyclic(arg(1, "n")?),
        "dihedral" => dihedral(arg(1, "n")?),
        "sym" => symmetric(arg(1, "n")?),
        "alt" => alternating(arg(1, "n")?),
        "q8" => quaternion8(),
        "elab" => elementary_abelian(arg(1, "p")?, arg(2, "k")?),
        "semidirect" => semidirect_cyclic(arg(1, "n")?, arg(2, "m")?, arg(3, "r")?),
        "affine" | "linear" => {
            let (p, k) = (arg(1, "p")?, arg(2, "k")?);
            let matrices = parse_matrices(parts.get(3).copied().unwrap_or(""), k)?;
            if parts[0] == "affine" {
                affine(p, k, &matrices)
            } else {
                linear(p, k, &matrices)
            }
        }
        "sl23" => linear(3, 2, &parse_matrices("1,1,0,1/1,0,1,1", 2)?),
        "gl23" => linear(3, 2, &parse_matrices("1,1,0,1/1,0,1,1/2,0,0,1", 2)?),
        "psl27" => Ok(psl27()),
        "paper72" => Ok(paper72()),
        _ => Err(GroupError::UnknownGroup(recipe.to_string())),
    }
}

/// Builds a group from a recipe such as `cyclic:6`, `sym:4`, `psl27`,
/// `semidirect:7:3:2` or `sym:3*cyclic:3` (`*` is the direct product).
pub fn parse_recipe(recipe: &str) -> Result<PermGroup> {
    let mut factors = recipe.split('*');
    let first = parse_factor(factors.next().unwrap_or(""))?;
    factors.try_fold(first, |acc, f| direct_product(&acc, &parse_factor(f)?))
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusEntry {
    pub name: String,
    pub recipe: String,
    pub order: u128,
    pub notes: Option<String>,
    #[serde(skip)]
    pub group: PermGroup,
}

impl CorpusEntry {
    fn build(name: &str, recipe: &str, expected: u128, notes: Option<&str>) -> Result<Self> {
        let group = parse_recipe(recipe)?;
        if group.order() != expected {
            return Err(invalid(format!(
                "{name}: recipe `{recipe}` gave order {} instead of {expected}",
                group.order()
            )));
        }
        Ok(Self {
            name: name.to_string(),
            recipe: recipe.to_string(),
            order: expected,
            notes: notes.map(str::to_string),
            group,
        })
    }

    /// Whether full lattice suites run on this entry by default.
    pub fn lattice_eligible(&self) -> bool {
        self.order <= LATTICE_ELIGIBLE_ORDER
    }
}

/// Largest order marked lattice-eligible in the default corpus.
pub const LATTICE_ELIGIBLE_ORDER: u128 = 200;

const MANIFEST: &[(&str, &str, u128, Option<&str>)] = &[
    ("trivial", "cyclic:1", 1, None),
    ("c2", "cyclic:2", 2, None),
    ("c3", "cyclic:3", 3, None),
    ("c4", "cyclic:4", 4, None),
    ("c2xc2", "elab:2:2", 4, None),
    ("c5", "cyclic:5", 5, None),
    ("c6", "cyclic:6", 6, None),
    ("s3", "sym:3", 6, None),
    ("c7", "cyclic:7", 7, None),
    ("c8", "cyclic:8", 8, None),
    ("c2xc4", "cyclic:2*cyclic:4", 8, None),
    ("c2^3", "elab:2:3", 8, None),
    ("d8", "dihedral:4", 8, None),
    ("q8", "q8", 8, None),
    ("c3xc3", "elab:3:2", 9, None),
    ("d10", "dihedral:5", 10, None),
    ("c12", "cyclic:12", 12, None),
    ("c2xc6", "cyclic:2*cyclic:6", 12, None),
    ("d12", "dihedral:6", 12, None),
    ("dic12", "semidirect:3:4:2", 12, Some("C3 x| C4, the dicyclic group of order 12")),
    ("a4", "alt:4", 12, None),
    ("c2^4", "elab:2:4", 16, None),
    ("s3xc3", "sym:3*cyclic:3", 18, None),
    ("f20", "semidirect:5:4:2", 20, Some("Frobenius group C5 x| C4")),
    ("f21", "semidirect:7:3:2", 21, Some("Frobenius group C7 x| C3")),
    ("c3:c8", "semidirect:3:8:2", 24, None),
    ("s4", "sym:4", 24, None),
    ("sl23", "sl23", 24, Some("SL(2,3) on the nonzero vectors of F_3^2")),
    ("a4xc2", "alt:4*cyclic:2", 24, None),
    ("s3xs3", "sym:3*sym:3", 36, None),
    ("c3^2:c4", "affine:3:2:1,1,1,2", 36, Some("F_3^2 x| C4, C4 acting fixed-point-freely")),
    ("f42", "semidirect:7:6:3", 42, Some("Frobenius group C7 x| C6")),
    ("s4xc2", "sym:4*cyclic:2", 48, None),
    ("gl23", "gl23", 48, Some("GL(2,3) on the nonzero vectors of F_3^2")),
    ("agl18", "affine:2:3:0,0,1,1,0,1,0,1,0", 56, Some("AGL(1,8) = F_2^3 x| C7")),
    ("a5", "alt:5", 60, None),
    ("paper72", "paper72", 72, Some("IdGroup=[72,39]; <a,b,c | a^3=b^3=c^8=1, ab=ba, a^c=b, b^c=ab>")),
    ("s5", "sym:5", 120, None),
    ("psl27", "psl27", 168, Some("PSL(2,7), the simple group of order 168")),
    ("s5xc2", "sym:5*cyclic:2", 240, Some("above the default lattice bound")),
];

/// The compiled-in corpus, in manifest order.
pub fn default_manifest() -> Vec<CorpusEntry> {
    MANIFEST
        .iter()
        .map(|&(name, recipe, order, notes)| {
            CorpusEntry::build(name, recipe, order, notes).expect("built-in corpus entries are valid")
        })
        .collect()
}

/// Reads a manifest of `name = path-or-recipe` lines; `#` starts a comment.
/// Relative paths resolve against `base_dir`.
pub fn parse_manifest(text: &str, base_dir: &Path) -> Result<Vec<CorpusEntry>> {
    let mut entries: Vec<CorpusEntry> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (name, target) = line.split_once('=').ok_or_else(|| GroupError::Parse {
            line: lineno + 1,
            message: "expected `name = path-or-recipe`".into(),
        })?;
        let (name, target) = (name.trim(), target.trim());
        if entries.iter().any(|e| e.name == name) {
            return Err(GroupError::Parse {
                line: lineno + 1,
                message: format!("duplicate entry `{name}`"),
            });
        }
        let group = load_target(target, base_dir).map_err(|e| GroupError::Parse {
            line: lineno + 1,
            message: e.to_string(),
        })?;
        entries.push(CorpusEntry {
            name: name.to_string(),
            recipe: target.to_string(),
            order: group.order(),
            notes: None,
            group,
        });
    }
    Ok(entries)
}

fn load_target(target: &str, base_dir: &Path) -> Result<PermGroup> {
    let path = base_dir.join(target);
    if path.is_file() {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| invalid(format!("{}: {e}", path.display())))?;
        parse_group_file(&text)
    } else {
        parse_recipe(target)
    }
}

/// Resolves a corpus name, a group file path or a recipe, in that order.
pub fn resolve_group(reference: &str, corpus: &[CorpusEntry]) -> Result<PermGroup> {
    if let Some(entry) = corpus.iter().find(|e| e.name == reference) {
        return Ok(entry.group.clone());
    }
    match load_target(reference, Path::new(".")) {
        Err(GroupError::UnknownGroup(_)) => Err(GroupError::UnknownGroup(reference.to_string())),
        other => other,
    }
}
