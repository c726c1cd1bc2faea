//! AHU canonical encodings of free trees.
//!
//! A rooted tree is encoded as `(` followed by the sorted encodings of its
//! children followed by `)`. A free tree is encoded rooted at its center; for
//! bicentral trees the lexicographically smaller of the two encodings wins.
//! Isomorphisms map centers to centers, so equal codes mean isomorphic trees.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("canonical code is empty")]
    Empty,
    #[error("unbalanced parentheses at byte {0}")]
    Unbalanced(usize),
    #[error("unexpected byte {byte:?} at {pos}")]
    BadByte { byte: char, pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        // only ever holds b'(' and b')'
        std::str::from_utf8(&self.0).expect("ascii")
    }

    pub fn parse(text: &str) -> Result<CanonicalCode, CodeError> {
        let bytes = text.trim().as_bytes();
        validate(bytes)?;
        Ok(CanonicalCode(bytes.to_vec()))
    }

    /// Rebuilds a tree from the code: preorder ids, root 0.
    pub fn to_tree(&self) -> Tree {
        let mut parents: Vec<Option<usize>> = Vec::with_capacity(self.0.len() / 2);
        let mut stack: Vec<usize> = Vec::new();
        for &b in &self.0 {
            if b == b'(' {
                let id = parents.len();
                parents.push(stack.last().copied());
                stack.push(id);
            } else {
                stack.pop();
            }
        }
        Tree::from_parents(&parents).expect("validated code describes a tree")
    }

    /// Number of vertices described.
    pub fn order(&self) -> usize {
        self.0.len() / 2
    }
}

fn validate(bytes: &[u8]) -> Result<(), CodeError> {
    if bytes.is_empty() {
        return Err(CodeError::Empty);
    }
    let mut depth: usize = 0;
    for (pos, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => {
                depth = depth.checked_sub(1).ok_or(CodeError::Unbalanced(pos))?;
                // exactly one root
                if depth == 0 && pos + 1 != bytes.len() {
                    return Err(CodeError::Unbalanced(pos));
                }
            }
            other => {
                return Err(CodeError::BadByte {
                    byte: other as char,
                    pos,
                })
            }
        }
    }
    if depth != 0 {
        return Err(CodeError::Unbalanced(bytes.len()));
    }
    Ok(())
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for CanonicalCode {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        CanonicalCode::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// AHU encoding of `t` rooted at `root`.
pub fn rooted_code(t: &Tree, root: usize) -> Vec<u8> {
    let (parent, order) = t.rooted(root);
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); t.order()];
    for &v in order.iter().rev() {
        let mut children: Vec<Vec<u8>> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| Some(w) != parent[v])
            .map(|&w| std::mem::take(&mut codes[w]))
            .collect();
        children.sort_unstable();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for c in children {
            code.extend_from_slice(&c);
        }
        code.push(b')');
        codes[v] = code;
    }
    std::mem::take(&mut codes[root])
}

pub fn canonical_code(t: &Tree) -> CanonicalCode {
    let code = t
        .centers()
        .into_iter()
        .map(|c| rooted_code(t, c))
        .min()
        .expect("every tree has a center");
    CanonicalCode(code)
}

pub fn is_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.order() == b.order() && canonical_code(a) == canonical_code(b)
}
