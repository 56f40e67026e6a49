//! Plain-text group files.
//!
//! ```text
//! # PSL(2,7) on the projective line
//! degree 8
//! (2 3 4 5 6 7 8)
//! (1 2)(3 8)(4 6)(5 7)
//! ```
//!
//! The first non-comment line is `degree N`; every further non-comment line is
//! one generator in disjoint-cycle notation with 1-based points. `#` starts a
//! comment and both LF and CRLF line endings are accepted. A file without
//! generator lines describes the trivial group.

use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

pub fn parse_group_file(text: &str) -> Result<PermGroup> {
    let mut degree = None;
    let mut gens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| GroupError::Parse {
            line: lineno + 1,
            message,
        };
        match degree {
            None => {
                let value = line
                    .strip_prefix("degree")
                    .ok_or_else(|| err("expected `degree N` header".into()))?
                    .trim();
                let n: usize = value
                    .parse()
                    .map_err(|_| err(format!("invalid degree `{value}`")))?;
                if n == 0 {
                    return Err(err("degree must be at least 1".into()));
                }
                degree = Some(n);
            }
            Some(n) => {
                let perm = Permutation::parse_cycles(n, line).map_err(|e| err(e.to_string()))?;
                gens.push(perm);
            }
        }
    }
    let degree = degree.ok_or(GroupError::Parse {
        line: text.lines().count().max(1),
        message: "missing `degree N` header".into(),
    })?;
    if gens.is_empty() {
        gens.push(Permutation::identity(degree));
    }
    PermGroup::new(degree, gens)
}

pub fn write_group_file(group: &PermGroup) -> String {
    let mut out = format!("degree {}\n", group.degree());
    for g in group.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}
