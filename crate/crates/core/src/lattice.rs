//! Weighted lattice grids inside Young diagrams, partition functions over
//! monotone paths, nonintersecting path systems and the determinantal
//! formulas they produce for flagged Schur polynomials.
//!
//! Coordinates: the diagram sits in the fourth quadrant with its top-left
//! corner at the origin. The horizontal line `y = -s` runs from `x = 0` to
//! the length of the longer adjacent row, and an east step on it has weight
//! `x_{s+1}^{-1}`. North steps have weight 1.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, Monomial, PolyMatrix, Var};
use crate::shapes::Partition;
use crate::tableaux::{h_flagged_schur, in_window};

/// Largest grid accepted by the exhaustive path-system enumeration.
pub const BRUTE_FORCE_POINT_LIMIT: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

impl GridPoint {
    pub fn new(x: i64, y: i64) -> Self {
        GridPoint { x, y }
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// The lattice of a Young diagram with its edge weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGrid {
    diagram: Partition,
    /// `widths[s]` is the last x coordinate on the line `y = -s`.
    widths: Vec<usize>,
    /// Index of the first point of each line in the flat point numbering.
    offsets: Vec<usize>,
}

impl WeightedGrid {
    pub fn new(diagram: Partition) -> Self {
        let m = diagram.len();
        let widths: Vec<usize> = (0..=m)
            .map(|s| diagram.row(if s == 0 { 0 } else { s - 1 }))
            .collect();
        let mut offsets = Vec::with_capacity(widths.len());
        let mut total = 0;
        for &w in &widths {
            offsets.push(total);
            total += w + 1;
        }
        WeightedGrid {
            diagram,
            widths,
            offsets,
        }
    }

    pub fn diagram(&self) -> &Partition {
        &self.diagram
    }

    /// Number of horizontal lines minus one, i.e. the number of rows.
    pub fn depth(&self) -> usize {
        self.widths.len() - 1
    }

    pub fn point_count(&self) -> usize {
        self.widths.iter().map(|w| w + 1).sum()
    }

    pub fn contains(&self, p: GridPoint) -> bool {
        p.x >= 0
            && p.y <= 0
            && (-p.y) as usize <= self.depth()
            && p.x as usize <= self.widths[(-p.y) as usize]
    }

    fn require(&self, p: GridPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "point {p} lies outside the grid of {}",
                self.diagram
            )))
        }
    }

    fn index(&self, p: GridPoint) -> usize {
        self.offsets[(-p.y) as usize] + p.x as usize
    }

    pub fn points(&self) -> impl Iterator<Item = GridPoint> + '_ {
        self.widths
            .iter()
            .enumerate()
            .flat_map(|(s, &w)| (0..=w as i64).map(move |x| GridPoint::new(x, -(s as i64))))
    }

    /// Weight of the east step leaving `p`, if that step exists.
    pub fn east_weight(&self, p: GridPoint) -> Option<Monomial> {
        let east = GridPoint::new(p.x + 1, p.y);
        (self.contains(p) && self.contains(east)).then(|| Monomial::var_pow((-p.y) as Var + 1, -1))
    }

    /// Whether the north step leaving `p` exists.
    pub fn has_north(&self, p: GridPoint) -> bool {
        self.contains(p) && self.contains(GridPoint::new(p.x, p.y + 1))
    }

    /// Product of all east-step weights of the grid.
    pub fn total_weight(&self) -> Monomial {
        Monomial::from_pairs(
            self.widths
                .iter()
                .enumerate()
                .map(|(s, &w)| (s as Var + 1, -(w as i32))),
        )
    }

    /// Partition function from `a` to every point; entries for points not
    /// reachable from `a` are zero.
    fn sweep_from(&self, a: GridPoint) -> Vec<LaurentPoly> {
        let mut z = vec![LaurentPoly::zero(); self.point_count()];
        z[self.index(a)] = LaurentPoly::one();
        let max_x = self.widths[0] as i64;
        // Predecessors of (x, y) are (x-1, y) and (x, y-1).
        for x in a.x..=max_x {
            for y in a.y..=0 {
                let p = GridPoint::new(x, y);
                if !self.contains(p) || p == a {
                    continue;
                }
                let mut acc = LaurentPoly::zero();
                let west = GridPoint::new(x - 1, y);
                if x > a.x && self.contains(west) {
                    let w = self.east_weight(west).expect("west step exists");
                    acc += z[self.index(west)].mul_monomial(&w);
                }
                let south = GridPoint::new(x, y - 1);
                if y > a.y && self.contains(south) {
                    acc += z[self.index(south)].clone();
                }
                let i = self.index(p);
                z[i] = acc;
            }
        }
        z
    }
}

/// Weighted sum over all monotone paths from `a` to `b`.
pub fn partition_function(grid: &WeightedGrid, a: GridPoint, b: GridPoint) -> Result<LaurentPoly> {
    grid.require(a)?;
    grid.require(b)?;
    if b.x < a.x || b.y < a.y {
        return Ok(LaurentPoly::zero());
    }
    Ok(grid.sweep_from(a).swap_remove(grid.index(b)))
}

/// A monotone path given by its vertex list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub points: Vec<GridPoint>,
}

impl LatticePath {
    pub fn start(&self) -> GridPoint {
        self.points[0]
    }

    pub fn end(&self) -> GridPoint {
        *self.points.last().expect("paths are nonempty")
    }

    pub fn weight(&self, grid: &WeightedGrid) -> Monomial {
        let mut w = Monomial::one();
        for pair in self.points.windows(2) {
            if pair[1].y == pair[0].y {
                w = w.mul(&grid.east_weight(pair[0]).expect("path step inside grid"));
            }
        }
        w
    }

    /// Checks unit east/north steps inside the grid.
    pub fn validate(&self, grid: &WeightedGrid) -> Result<()> {
        if self.points.is_empty() {
            return Err(Error::Domain("empty path".into()));
        }
        for &p in &self.points {
            grid.require(p)?;
        }
        for pair in self.points.windows(2) {
            let (p, q) = (pair[0], pair[1]);
            let east = q.x == p.x + 1 && q.y == p.y;
            let north = q.x == p.x && q.y == p.y + 1;
            if !east && !north {
                return Err(Error::Domain(format!(
                    "{p} to {q} is not a unit east or north step"
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.points.iter().enumerate() {
            if k > 0 {
                f.write_str("→")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSystem {
    pub paths: Vec<LatticePath>,
}

impl PathSystem {
    pub fn weight(&self, grid: &WeightedGrid) -> Monomial {
        self.paths
            .iter()
            .fold(Monomial::one(), |acc, p| acc.mul(&p.weight(grid)))
    }

    pub fn is_noncrossing(&self) -> bool {
        self.first_meeting().is_none()
    }

    /// `(i, point position on path i, j)` for the tail swap: smallest path
    /// index meeting another path, first shared point along it, smallest
    /// partner through that point.
    fn first_meeting(&self) -> Option<(usize, usize, usize)> {
        for (i, path) in self.paths.iter().enumerate() {
            for (pos, p) in path.points.iter().enumerate() {
                let partner = self
                    .paths
                    .iter()
                    .enumerate()
                    .find(|&(j, other)| j != i && other.points.contains(p));
                if let Some((j, _)) = partner {
                    return Some((i, pos, j));
                }
            }
        }
        None
    }
}

impl fmt::Display for PathSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.paths.iter().enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Exchanges the tails of two meeting paths after their first common
/// point. Returns `None` for noncrossing systems.
pub fn tail_swap(system: &PathSystem) -> Option<PathSystem> {
    let (i, pos_i, j) = system.first_meeting()?;
    let c = system.paths[i].points[pos_i];
    let pos_j = system.paths[j]
        .points
        .iter()
        .position(|&p| p == c)
        .expect("partner passes through the meeting point");
    let mut paths = system.paths.clone();
    let tail_i = system.paths[i].points[pos_i + 1..].to_vec();
    let tail_j = system.paths[j].points[pos_j + 1..].to_vec();
    paths[i].points.truncate(pos_i + 1);
    paths[i].points.extend(tail_j);
    paths[j].points.truncate(pos_j + 1);
    paths[j].points.extend(tail_i);
    Some(PathSystem { paths })
}

/// All monotone paths from `a` to `b`, in the order east-before-north at
/// every branching.
pub fn paths_between(grid: &WeightedGrid, a: GridPoint, b: GridPoint) -> Result<Vec<LatticePath>> {
    grid.require(a)?;
    grid.require(b)?;
    let mut out = Vec::new();
    let mut current = vec![a];
    fn walk(grid: &WeightedGrid, b: GridPoint, current: &mut Vec<GridPoint>, out: &mut Vec<LatticePath>) {
        let p = *current.last().unwrap();
        if p == b {
            out.push(LatticePath {
                points: current.clone(),
            });
            return;
        }
        for q in [GridPoint::new(p.x + 1, p.y), GridPoint::new(p.x, p.y + 1)] {
            if q.x <= b.x && q.y <= b.y && grid.contains(q) {
                current.push(q);
                walk(grid, b, current, out);
                current.pop();
            }
        }
    }
    if a.x <= b.x && a.y <= b.y {
        walk(grid, b, &mut current, &mut out);
    }
    Ok(out)
}

fn check_brute_force(grid: &WeightedGrid, starts: &[GridPoint], ends: &[GridPoint]) -> Result<()> {
    if starts.len() != ends.len() {
        return Err(Error::Dimension(format!(
            "{} start points but {} end points",
            starts.len(),
            ends.len()
        )));
    }
    if grid.point_count() > BRUTE_FORCE_POINT_LIMIT {
        return Err(Error::Budget(format!(
            "exhaustive path enumeration is limited to {BRUTE_FORCE_POINT_LIMIT} grid points, this grid has {}",
            grid.point_count()
        )));
    }
    Ok(())
}

/// Every tuple of pairwise vertex-disjoint paths, path `k` joining
/// `starts[k]` to `ends[k]`. Exhaustive; small grids only.
pub fn nc_path_systems(
    grid: &WeightedGrid,
    starts: &[GridPoint],
    ends: &[GridPoint],
) -> Result<Vec<PathSystem>> {
    check_brute_force(grid, starts, ends)?;
    let candidates: Vec<Vec<(LatticePath, u64)>> = starts
        .iter()
        .zip(ends)
        .map(|(&a, &b)| {
            Ok(paths_between(grid, a, b)?
                .into_iter()
                .map(|p| {
                    let mask = p.points.iter().fold(0u64, |m, &q| m | 1 << grid.index(q));
                    (p, mask)
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn pick(
        k: usize,
        used: u64,
        candidates: &[Vec<(LatticePath, u64)>],
        chosen: &mut Vec<usize>,
        out: &mut Vec<PathSystem>,
    ) {
        if k == candidates.len() {
            out.push(PathSystem {
                paths: chosen
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| candidates[i][c].0.clone())
                    .collect(),
            });
            return;
        }
        for (c, (_, mask)) in candidates[k].iter().enumerate() {
            if used & mask == 0 {
                chosen.push(c);
                pick(k + 1, used | mask, candidates, chosen, out);
                chosen.pop();
            }
        }
    }
    pick(0, 0, &candidates, &mut chosen, &mut out);
    Ok(out)
}

/// Weighted count of noncrossing systems by exhaustive enumeration.
pub fn z_nc(grid: &WeightedGrid, starts: &[GridPoint], ends: &[GridPoint]) -> Result<LaurentPoly> {
    Ok(nc_path_systems(grid, starts, ends)?
        .iter()
        .map(|s| LaurentPoly::monomial(s.weight(grid)))
        .sum())
}

/// The matrix `(Z(starts[i], ends[j]))`.
pub fn lgv_matrix(grid: &WeightedGrid, starts: &[GridPoint], ends: &[GridPoint]) -> Result<PolyMatrix> {
    if starts.len() != ends.len() {
        return Err(Error::Dimension(format!(
            "{} start points but {} end points",
            starts.len(),
            ends.len()
        )));
    }
    for &p in starts.iter().chain(ends) {
        grid.require(p)?;
    }
    let rows: Vec<Vec<LaurentPoly>> = starts
        .par_iter()
        .map(|&a| {
            let z = grid.sweep_from(a);
            ends.iter()
                .map(|&b| {
                    if b.x < a.x || b.y < a.y {
                        LaurentPoly::zero()
                    } else {
                        z[grid.index(b)].clone()
                    }
                })
                .collect()
        })
        .collect();
    let h = starts.len();
    PolyMatrix::new(h, h, rows.into_iter().flatten().collect())
}

pub fn lgv_determinant(grid: &WeightedGrid, starts: &[GridPoint], ends: &[GridPoint]) -> Result<LaurentPoly> {
    lgv_matrix(grid, starts, ends)?.determinant()
}

/// The 1-flagged Schur polynomial as a prefactor times the partition
/// function across the diagram. Empty diagram gives 1.
pub fn one_flagged_via_paths(lambda: &Partition) -> LaurentPoly {
    if lambda.is_empty() {
        return LaurentPoly::one();
    }
    let grid = WeightedGrid::new(lambda.clone());
    let a = GridPoint::new(0, -(lambda.len() as i64));
    let b = GridPoint::new(lambda.first() as i64, 0);
    let z = partition_function(&grid, a, b).expect("corners lie on the grid");
    z.mul_monomial(&one_flagged_prefactor(lambda, 1))
}

/// `x_first^{λ_1} · x_{first+1}^{λ_1} x_{first+2}^{λ_2} ...`
fn one_flagged_prefactor(lambda: &Partition, first: Var) -> Monomial {
    Monomial::var_pow(first, lambda.first() as i32)
        .mul(&Monomial::consecutive_powers(first + 1, lambda.parts()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Path `k` is lengthened by `h - k` steps at each end.
    Plain,
    /// Path `k` is lengthened by `2(h - k)` steps, inside the staircase
    /// extension of the diagram.
    Staircase,
}

/// Grid, endpoints and monomial prefactor of the determinantal formula,
/// with endpoints listed so that matrix entry `(i, j)` matches the
/// displayed convention (see [`entry_as_one_flagged`]).
#[derive(Clone, Debug)]
pub struct LgvConstruction {
    pub grid: WeightedGrid,
    pub starts: Vec<GridPoint>,
    pub ends: Vec<GridPoint>,
    pub prefactor: Monomial,
}

pub fn lgv_construction(lambda: &Partition, h: usize, variant: Variant) -> Result<LgvConstruction> {
    if lambda.is_empty() {
        return Err(Error::Domain(
            "the path construction needs a nonempty diagram".into(),
        ));
    }
    if h == 0 {
        return Err(Error::Domain("h must be at least 1".into()));
    }
    let m = lambda.len() as i64;
    let l1 = lambda.first() as i64;
    let hi = h as i64;
    let lambda_part = Monomial::consecutive_powers(h as Var + 1, lambda.parts());
    let (diagram, starts, ends, stair) = match variant {
        Variant::Plain => (
            lambda.extend(h - 1, h - 1)?,
            (1..=hi)
                .map(|i| GridPoint::new(i - 1, -m - hi + 1))
                .collect::<Vec<_>>(),
            (1..=hi)
                .map(|i| GridPoint::new(l1 + hi - 1, 1 - i))
                .collect::<Vec<_>>(),
            (1..=hi)
                .map(|k| (k as Var, (l1 + hi - k) as i32))
                .collect::<Vec<_>>(),
        ),
        Variant::Staircase => (
            lambda.staircase_extend(h - 1, h - 1),
            (1..=hi)
                .map(|k| GridPoint::new(k - 1, -m - 2 * hi + k + 1))
                .collect(),
            (1..=hi)
                .map(|k| GridPoint::new(l1 + 2 * hi - k - 1, 1 - k))
                .collect(),
            (1..=hi).map(|k| (k as Var, (l1 + 2 * (hi - k)) as i32)).collect(),
        ),
    };
    let mut starts = starts;
    let mut ends = ends;
    starts.reverse();
    ends.reverse();
    Ok(LgvConstruction {
        grid: WeightedGrid::new(diagram),
        starts,
        ends,
        prefactor: Monomial::from_pairs(stair).mul(&lambda_part),
    })
}

impl LgvConstruction {
    pub fn matrix(&self) -> Result<PolyMatrix> {
        lgv_matrix(&self.grid, &self.starts, &self.ends)
    }

    pub fn evaluate(&self) -> Result<LaurentPoly> {
        Ok(self.matrix()?.determinant()?.mul_monomial(&self.prefactor))
    }
}

/// The `h`-flagged Schur polynomial as a monomial times a determinant of
/// partition functions.
pub fn h_flagged_via_lgv(lambda: &Partition, h: usize, variant: Variant) -> Result<LaurentPoly> {
    lgv_construction(lambda, h, variant)?.evaluate()
}

/// A matrix entry written as a 1-flagged Schur polynomial of `diagram`
/// in the variables `x_{first_var}, x_{first_var+1}, ...`, divided by
/// `denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryForm {
    pub diagram: Partition,
    pub denominator: Monomial,
    pub first_var: Var,
}

impl EntryForm {
    pub fn evaluate(&self) -> LaurentPoly {
        in_window(&h_flagged_schur(&self.diagram, 1), self.first_var).monomial_quotient(&self.denominator)
    }
}

/// Reads off the sub-diagram cut out by the rectangle between `a`
/// (bottom-left) and `b` (top-right), so that `Z(a, b)` is its 1-flagged
/// Schur polynomial over a monomial.
fn entry_form(grid: &WeightedGrid, a: GridPoint, b: GridPoint) -> Result<EntryForm> {
    grid.require(a)?;
    grid.require(b)?;
    if b.x < a.x || b.y < a.y {
        return Err(Error::Domain(format!("no monotone path from {a} to {b}")));
    }
    let top = (-b.y) as usize;
    let bottom = (-a.y) as usize;
    let parts: Vec<usize> = (top + 1..=bottom)
        .map(|r| grid.diagram.row(r - 1).min(b.x as usize) - a.x as usize)
        .collect();
    if parts.first().is_some_and(|&p| p != (b.x - a.x) as usize) {
        return Err(Error::Domain(format!(
            "the row below {b} is shorter than the rectangle from {a}"
        )));
    }
    let first_var = top as Var + 1;
    let diagram = Partition::from_unsorted(parts.clone());
    let denominator = if parts.is_empty() {
        Monomial::one()
    } else {
        Monomial::var_pow(first_var, parts[0] as i32)
            .mul(&Monomial::consecutive_powers(first_var + 1, &parts))
    };
    Ok(EntryForm {
        diagram,
        denominator,
        first_var,
    })
}

/// Closed form of matrix entry `(i, j)` (1-based) of the construction.
///
/// In the plain variant the entry carries the diagram `λ[j-1, i-1]` in the
/// variables `x_{h+1-j}, ..., x_{h+m}`; e.g. for `λ = (2,1)`, `h = 2`,
/// entry `(1,1)` is `s_(2,1)(x2,x3,x4) / (x2^2 x3^2 x4)`.
pub fn entry_as_one_flagged(
    lambda: &Partition,
    h: usize,
    i: usize,
    j: usize,
    variant: Variant,
) -> Result<EntryForm> {
    if i == 0 || j == 0 || i > h || j > h {
        return Err(Error::Dimension(format!(
            "entry ({i},{j}) outside a {h}x{h} matrix"
        )));
    }
    let c = lgv_construction(lambda, h, variant)?;
    entry_form(&c.grid, c.starts[i - 1], c.ends[j - 1])
}
