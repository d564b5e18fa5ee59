//! Two rewirings that strictly increase the sum-connectivity index.
//!
//! Both take explicit witness vertices and refuse (with a named
//! [`PreconditionError`]) when the witnesses do not describe the required
//! configuration. Vertex and edge counts are preserved.

use crate::error::{Error, PreconditionError, Result};
use crate::graph::Graph;

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    Ok(())
}

/// The pendant path running from `end` towards `root`, listed from `end` to
/// the vertex adjacent to `root`. All its vertices other than `end` must have
/// degree two.
pub fn pendant_path(g: &Graph, root: usize, end: usize) -> Result<Vec<usize>> {
    check_vertex(g, root)?;
    check_vertex(g, end)?;
    if end == root || g.degree(end) != 1 {
        return Err(PreconditionError::NotPendant(end).into());
    }
    let mut path = vec![end];
    let (mut prev, mut cur) = (end, end);
    loop {
        let next = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| w != prev)
            .expect("path vertices have a forward neighbor");
        if next == root {
            return Ok(path);
        }
        if g.degree(next) != 2 {
            return Err(PreconditionError::NotPendantPath { end, root }.into());
        }
        path.push(next);
        prev = cur;
        cur = next;
    }
}

/// Replaces two pendant paths at `u` (ending in `p1` and `p2`) by one path
/// whose length is their sum: the shorter path is cut from `u` and hung from
/// the pendant end of the longer one.
pub fn merge_pendant_paths(g: &Graph, u: usize, p1: usize, p2: usize) -> Result<Graph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let path1 = pendant_path(g, u, p1)?;
    let path2 = pendant_path(g, u, p2)?;
    if path1.iter().any(|v| path2.contains(v)) {
        return Err(PreconditionError::PathsNotDisjoint.into());
    }
    let base = g.n() - path1.len() - path2.len();
    if base < 2 {
        return Err(PreconditionError::BaseTooSmall(base).into());
    }
    let (long, short) = if path1.len() >= path2.len() {
        (path1, path2)
    } else {
        (path2, path1)
    };
    let long_end = long[0];
    let short_head = *short.last().expect("paths are nonempty");
    Ok(g.rewire(&[(u, short_head)], &[(long_end, short_head)]))
}

/// Moves the edge `u–u2` to `u'–u2`, where `u` has degree three, `u'` is the
/// pendant end of a path hanging at `u`, and `u2` is one of the other two
/// neighbors of `u`. Refused unless one of those two neighbors has degree at
/// most four.
pub fn reattach_to_pendant(h: &Graph, u: usize, u2: usize, u_prime: usize) -> Result<Graph> {
    check_vertex(h, u)?;
    check_vertex(h, u2)?;
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    if h.degree(u) != 3 {
        return Err(PreconditionError::WrongDegree {
            vertex: u,
            degree: h.degree(u),
            expected: 3,
        }
        .into());
    }
    let path = pendant_path(h, u, u_prime)?;
    let head = *path.last().expect("paths are nonempty");
    if !h.has_edge(u, u2) || u2 == head {
        return Err(PreconditionError::NotBaseNeighbor(u2).into());
    }
    let u1 = *h
        .neighbors(u)
        .iter()
        .find(|&&w| w != head && w != u2)
        .expect("u has degree three");
    let (d1, d2) = (h.degree(u1), h.degree(u2));
    if d1.min(d2) > 4 {
        return Err(PreconditionError::DegreeCondition(d1, d2).into());
    }
    Ok(h.rewire(&[(u, u2)], &[(u_prime, u2)]))
}
