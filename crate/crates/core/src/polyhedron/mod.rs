//! The regular icosahedron as a combinatorial object.
//!
//! Fixed vertex numbering: vertex 0 is the north pole adjacent to the upper
//! ring 1..5, vertex 11 the south pole adjacent to the lower ring 6..10, with
//! the two rings joined antiprism-style. Every pair of distinct vertices is
//! at graph distance 1 (an edge), 2 (a "middle line"), or 3 (a diameter
//! through the solid), and those three chord classes drive the whole triangle
//! taxonomy: faces, large equilaterals, golden triangles, golden gnomons and
//! scalenes are told apart purely by their chord-kind multiset.

mod symmetry;

pub use symmetry::{automorphism_group, Generators, Perm, SymmetryGroup, SymmetryOp};

use alloc::vec::Vec;
use core::fmt;

pub const VERTEX_COUNT: usize = 12;

/// One of the 12 icosahedron vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u8);

impl VertexId {
    pub fn new(index: u8) -> Self {
        assert!(index < 12, "vertex index out of range: {index}");
        VertexId(index)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn all() -> impl Iterator<Item = VertexId> {
        (0..12).map(VertexId)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// Chord class of a vertex pair, by graph distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChordKind {
    /// Distance 1: an edge of the solid.
    Edge,
    /// Distance 2: a "middle line" (neither neighboring nor opposite).
    Middle,
    /// Distance 3: the segment joining opposite vertices.
    Diameter,
}

impl ChordKind {
    pub fn name(self) -> &'static str {
        match self {
            ChordKind::Edge => "Edge",
            ChordKind::Middle => "Middle",
            ChordKind::Diameter => "Diameter",
        }
    }
}

/// Triangle taxonomy. The class is a function of the chord-kind multiset
/// alone; golden kinds also carry their apex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TriangleClass {
    /// {Edge, Edge, Edge}: one of the 20 faces.
    Face,
    /// {Middle, Middle, Middle}: a large equilateral.
    LargeEquilateral,
    /// {Edge, Middle, Middle}: isosceles with side ratio φ, long sides doubled.
    GoldenTriangle,
    /// {Edge, Edge, Middle}: isosceles with side ratio φ, short sides doubled.
    GoldenGnomon,
    /// {Edge, Middle, Diameter}: the only mixed class.
    Scalene,
}

impl TriangleClass {
    pub fn name(self) -> &'static str {
        match self {
            TriangleClass::Face => "Face",
            TriangleClass::LargeEquilateral => "LargeEquilateral",
            TriangleClass::GoldenTriangle => "GoldenTriangle",
            TriangleClass::GoldenGnomon => "GoldenGnomon",
            TriangleClass::Scalene => "Scalene",
        }
    }
}

/// A classified vertex triple. `apex` is the vertex joining the two equal
/// sides and is present exactly for the two golden classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleKind {
    pub class: TriangleClass,
    pub apex: Option<VertexId>,
}

/// Errors for the degenerate inputs the chord/triangle queries reject.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometryError {
    /// A chord query named the same vertex twice.
    DegeneratePair,
    /// A triangle or rectangle query repeated a vertex.
    RepeatedVertex,
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::DegeneratePair => write!(f, "chord endpoints must be distinct"),
            GeometryError::RepeatedVertex => write!(f, "vertices must be pairwise distinct"),
        }
    }
}

/// Per-vertex cyclic neighbor order, counterclockwise as seen from outside
/// the solid. Derived once from the coordinate embedding (cyclic permutations
/// of (0, ±1, ±φ)); the numeric cross-check lives in the test suite so the
/// runtime stays integer-only.
const ROTATION_SYSTEM: [[u8; 5]; 12] = [
    [1, 2, 3, 4, 5],
    [0, 2, 7, 6, 5],
    [0, 3, 8, 7, 1],
    [0, 4, 9, 8, 2],
    [0, 5, 10, 9, 3],
    [0, 1, 6, 10, 4],
    [1, 7, 11, 10, 5],
    [2, 8, 11, 6, 1],
    [3, 9, 11, 7, 2],
    [4, 10, 11, 8, 3],
    [5, 6, 11, 9, 4],
    [6, 10, 9, 8, 7],
];

/// The icosahedron graph with its distance, opposite, face and orientation
/// data precomputed. Immutable after construction.
#[derive(Debug, Clone)]
pub struct IcosaGraph {
    adjacency: [[bool; 12]; 12],
    neighbors: [[u8; 5]; 12],
    distance: [[u8; 12]; 12],
    opposite: [u8; 12],
    faces: Vec<[u8; 3]>,
    rotation_system: [[u8; 5]; 12],
}

impl IcosaGraph {
    /// Builds the canonical construction: poles plus two five-rings. The
    /// construction is total; the internal consistency checks only guard
    /// against defects in this file itself.
    pub fn new() -> Self {
        let mut adjacency = [[false; 12]; 12];
        let mut link = |a: usize, b: usize| {
            adjacency[a][b] = true;
            adjacency[b][a] = true;
        };
        for i in 1..=5 {
            link(0, i);
            link(11, i + 5);
            link(i, if i == 5 { 1 } else { i + 1 }); // upper ring
            link(i + 5, if i == 5 { 6 } else { i + 6 }); // lower ring
            link(i, i + 5);
            link(i, (i % 5) + 6);
        }

        let mut neighbors = [[0u8; 5]; 12];
        for v in 0..12 {
            let mut k = 0;
            for w in 0..12 {
                if adjacency[v][w] {
                    neighbors[v][k] = w as u8;
                    k += 1;
                }
            }
            assert_eq!(k, 5, "icosahedron must be 5-regular");
        }

        // All-pairs distances by breadth-first search from each vertex.
        let mut distance = [[u8::MAX; 12]; 12];
        for v in 0..12 {
            distance[v][v] = 0;
            let mut frontier = alloc::vec![v];
            let mut d = 0u8;
            while !frontier.is_empty() {
                d += 1;
                let mut next = Vec::new();
                for &u in &frontier {
                    for &w in &neighbors[u] {
                        let w = w as usize;
                        if distance[v][w] == u8::MAX {
                            distance[v][w] = d;
                            next.push(w);
                        }
                    }
                }
                frontier = next;
            }
        }

        let mut opposite = [0u8; 12];
        for v in 0..12 {
            let far: Vec<usize> = (0..12).filter(|&w| distance[v][w] == 3).collect();
            assert_eq!(far.len(), 1, "every vertex has a unique antipode");
            opposite[v] = far[0] as u8;
        }

        let mut faces = Vec::new();
        for a in 0..12u8 {
            for b in a + 1..12 {
                for c in b + 1..12 {
                    if adjacency[a as usize][b as usize]
                        && adjacency[b as usize][c as usize]
                        && adjacency[a as usize][c as usize]
                    {
                        faces.push([a, b, c]);
                    }
                }
            }
        }
        assert_eq!(faces.len(), 20, "icosahedron has 20 faces");

        IcosaGraph {
            adjacency,
            neighbors,
            distance,
            opposite,
            faces,
            rotation_system: ROTATION_SYSTEM,
        }
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u.index()][v.index()]
    }

    pub fn neighbors(&self, v: VertexId) -> [VertexId; 5] {
        self.neighbors[v.index()].map(VertexId)
    }

    pub fn distance(&self, u: VertexId, v: VertexId) -> u8 {
        self.distance[u.index()][v.index()]
    }

    pub fn opposite(&self, v: VertexId) -> VertexId {
        VertexId(self.opposite[v.index()])
    }

    /// The 20 faces as sorted vertex triples, in lexicographic order.
    pub fn faces(&self) -> impl Iterator<Item = [VertexId; 3]> + '_ {
        self.faces.iter().map(|t| t.map(VertexId))
    }

    /// Cyclic neighbor order at `v`, counterclockwise from outside.
    pub fn rotation_order(&self, v: VertexId) -> [VertexId; 5] {
        self.rotation_system[v.index()].map(VertexId)
    }

    /// Chord class of a vertex pair.
    pub fn chord_kind(&self, u: VertexId, v: VertexId) -> Result<ChordKind, GeometryError> {
        if u == v {
            return Err(GeometryError::DegeneratePair);
        }
        Ok(match self.distance(u, v) {
            1 => ChordKind::Edge,
            2 => ChordKind::Middle,
            3 => ChordKind::Diameter,
            d => unreachable!("icosahedron diameter is 3, got {d}"),
        })
    }

    /// Classifies a vertex triple by its chord-kind multiset and locates the
    /// apex for the golden classes.
    pub fn classify_triangle(
        &self,
        t: [VertexId; 3],
    ) -> Result<TriangleKind, GeometryError> {
        let [a, b, c] = t;
        if a == b || b == c || a == c {
            return Err(GeometryError::RepeatedVertex);
        }
        // Chord opposite each vertex: kinds[i] faces t[i].
        let kinds = [
            self.chord_kind(b, c)?,
            self.chord_kind(a, c)?,
            self.chord_kind(a, b)?,
        ];
        let count = |k: ChordKind| kinds.iter().filter(|&&x| x == k).count();
        let (e, m, d) = (
            count(ChordKind::Edge),
            count(ChordKind::Middle),
            count(ChordKind::Diameter),
        );
        let class = match (e, m, d) {
            (3, 0, 0) => TriangleClass::Face,
            (0, 3, 0) => TriangleClass::LargeEquilateral,
            (1, 2, 0) => TriangleClass::GoldenTriangle,
            (2, 1, 0) => TriangleClass::GoldenGnomon,
            (1, 1, 1) => TriangleClass::Scalene,
            other => unreachable!("impossible chord multiset {other:?}"),
        };
        // The apex is the vertex not incident to the odd chord out, i.e. the
        // one facing it: for a golden triangle the single Edge, for a gnomon
        // the single Middle.
        let apex = match class {
            TriangleClass::GoldenTriangle => {
                Some(t[kinds.iter().position(|&k| k == ChordKind::Edge).unwrap()])
            }
            TriangleClass::GoldenGnomon => {
                Some(t[kinds.iter().position(|&k| k == ChordKind::Middle).unwrap()])
            }
            _ => None,
        };
        Ok(TriangleKind { class, apex })
    }

    /// True iff the four vertices are two antipodal pairs whose 4-cycle
    /// alternates Edge and Middle chords (equivalently: an edge together with
    /// its antipodal edge).
    pub fn is_golden_rectangle(&self, q: [VertexId; 4]) -> Result<bool, GeometryError> {
        for i in 0..4 {
            for j in i + 1..4 {
                if q[i] == q[j] {
                    return Err(GeometryError::RepeatedVertex);
                }
            }
        }
        let [a, b, c, d] = q;
        // Locate a's antipode among the rest; the remaining two must pair up.
        let (a2, rest) = if self.opposite(a) == b {
            (b, [c, d])
        } else if self.opposite(a) == c {
            (c, [b, d])
        } else if self.opposite(a) == d {
            (d, [b, c])
        } else {
            return Ok(false);
        };
        if self.opposite(rest[0]) != rest[1] {
            return Ok(false);
        }
        // 4-cycle a, rest[0], a2, rest[1]: opposite sides share a kind by
        // central symmetry, so two chords suffice.
        let s1 = self.chord_kind(a, rest[0])?;
        let s2 = self.chord_kind(rest[0], a2)?;
        Ok(matches!(
            (s1, s2),
            (ChordKind::Edge, ChordKind::Middle) | (ChordKind::Middle, ChordKind::Edge)
        ))
    }

    /// All `C(12,2)` unordered pairs, for census-style scans.
    pub fn vertex_pairs() -> impl Iterator<Item = (VertexId, VertexId)> {
        (0..12u8).flat_map(|a| (a + 1..12).map(move |b| (VertexId(a), VertexId(b))))
    }

    /// All `C(12,3)` unordered triples.
    pub fn vertex_triples() -> impl Iterator<Item = [VertexId; 3]> {
        (0..12u8).flat_map(|a| {
            (a + 1..12).flat_map(move |b| (b + 1..12).map(move |c| [a, b, c].map(VertexId)))
        })
    }
}

impl Default for IcosaGraph {
    fn default() -> Self {
        Self::new()
    }
}

/// Convenience for the spec-level entry point.
pub fn build_graph() -> IcosaGraph {
    IcosaGraph::new()
}
