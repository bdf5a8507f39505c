//! Test-only generators, brute-force oracles and external-tool plumbing.
#![allow(dead_code)]

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, VecDeque};
use std::hash::{Hash, Hasher};
use std::path::{Path, PathBuf};
use std::process::Command;

use hypocubic::embedding::trace_faces;
use hypocubic::{Graph, PlanarEmbedding, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn data_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

// ---------------------------------------------------------------- graph6

/// Parses one graph6 line (n < 63).
pub fn parse_graph6(line: &str) -> Graph {
    let bytes: Vec<u8> = line.trim().bytes().map(|b| b - 63).collect();
    let n = bytes[0] as usize;
    assert!(n < 63, "long graph6 headers are not needed here");
    let bits = bytes[1..]
        .iter()
        .flat_map(|&b| (0..6).rev().map(move |i| (b >> i) & 1 == 1));
    let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    let edges: Vec<_> = pairs.zip(bits).filter(|&(_, bit)| bit).map(|(p, _)| p).collect();
    Graph::from_edges(n, edges).expect("graph6 input is sub-cubic")
}

pub fn read_graph6_file(path: &Path) -> Vec<Graph> {
    std::fs::read_to_string(path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
        .lines()
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}

// ---------------------------------------------------------------- isomorphism

fn hash_of<T: Hash>(t: &T) -> u64 {
    let mut h = DefaultHasher::new();
    t.hash(&mut h);
    h.finish()
}

/// Colour refinement started from degrees, run to `n` rounds.
pub fn refined_colors(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    let mut colors: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    for _ in 0..n {
        let next: Vec<u64> = (0..n)
            .map(|v| {
                let mut nb: Vec<u64> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                hash_of(&(colors[v], nb))
            })
            .collect();
        colors = next;
    }
    colors
}

pub fn invariant_hash(g: &Graph) -> u64 {
    let mut c = refined_colors(g);
    c.sort_unstable();
    hash_of(&(g.vertex_count(), g.edge_count(), c))
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let ca = refined_colors(a);
    let cb = refined_colors(b);
    let mut sa = ca.clone();
    let mut sb = cb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    let order = search_order(a);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_iso(a, b, &ca, &cb, &order, 0, &mut map, &mut used)
}

/// Vertices ordered so each one after the first of its component has an
/// earlier neighbour.
fn search_order(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend_iso(
    a: &Graph,
    b: &Graph,
    ca: &[u64],
    cb: &[u64],
    order: &[Vertex],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for x in 0..b.vertex_count() {
        if used[x] || ca[v] != cb[x] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| a.has_edge(v, u) == b.has_edge(x, map[u]));
        if !consistent {
            continue;
        }
        map[v] = x;
        used[x] = true;
        if extend_iso(a, b, ca, cb, order, depth + 1, map, used) {
            return true;
        }
        used[x] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Graphs up to isomorphism.
#[derive(Default)]
pub struct IsoClasses {
    buckets: HashMap<u64, Vec<Graph>>,
    len: usize,
}

impl IsoClasses {
    /// Adds `g` unless an isomorphic graph is present; returns whether it was new.
    pub fn insert(&mut self, g: Graph) -> bool {
        let bucket = self.buckets.entry(invariant_hash(&g)).or_default();
        if bucket.iter().any(|h| isomorphic(h, &g)) {
            return false;
        }
        bucket.push(g);
        self.len += 1;
        true
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn into_vec(self) -> Vec<Graph> {
        self.buckets.into_values().flatten().collect()
    }
}

// ---------------------------------------------------------------- generators

/// All connected graphs of maximum degree 3, by order, up to isomorphism.
///
/// Every connected graph has a vertex whose removal leaves it connected (a
/// leaf of a spanning tree), so adding one vertex to each smaller graph in
/// every possible way reaches every graph.
pub fn connected_subcubic(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = vec![Vec::new(), vec![Graph::empty(1)]];
    for n in 2..=max_n {
        let mut classes = IsoClasses::default();
        for g in &levels[n - 1] {
            let open: Vec<Vertex> = (0..n - 1).filter(|&v| g.degree(v) < 3).collect();
            for mask in 1u32..(1 << open.len()) {
                if mask.count_ones() > 3 {
                    continue;
                }
                let mut edges = g.edges();
                edges.extend((0..open.len()).filter(|i| mask >> i & 1 == 1).map(|i| (open[i], n - 1)));
                classes.insert(Graph::from_edges(n, edges).expect("degrees stay at most 3"));
            }
        }
        levels.push(classes.into_vec());
    }
    levels
}

/// Random connected graph of maximum degree 3: a random tree plus random
/// extra edges.
pub fn random_connected_subcubic<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        let open: Vec<Vertex> = (0..v).filter(|&u| g.degree(u) < 3).collect();
        let u = *open.choose(rng).expect("a tree always has a leaf");
        g.add_edge(u, v).unwrap();
    }
    let extra = rng.gen_range(0..=n);
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && g.degree(u) < 3 && g.degree(v) < 3 && !g.has_edge(u, v) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Uniform-ish random connected simple cubic graph by the configuration
/// model with rejection.
pub fn random_cubic<R: Rng>(rng: &mut R, n: usize) -> Graph {
    assert!(n >= 4 && n.is_multiple_of(2));
    loop {
        let mut points: Vec<Vertex> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(rng);
        let mut g = Graph::empty(n);
        let simple = points.chunks(2).all(|pair| g.add_edge(pair[0], pair[1]).is_ok());
        if simple && g.is_connected() {
            return g;
        }
    }
}

/// Random connected plane graph of maximum degree 3, grown from one edge by
/// edge subdivision, pendant edges and chords drawn inside a face.
pub fn random_plane_embedding<R: Rng>(rng: &mut R, steps: usize) -> PlanarEmbedding {
    let mut rot: Vec<Vec<Vertex>> = vec![vec![1], vec![0]];
    for _ in 0..steps {
        let n = rot.len();
        if n >= 200 {
            break;
        }
        match rng.gen_range(0..3) {
            0 => {
                let u = rng.gen_range(0..n);
                let i = rng.gen_range(0..rot[u].len());
                let v = rot[u][i];
                let w = n;
                rot[u][i] = w;
                let j = rot[v].iter().position(|&x| x == u).unwrap();
                rot[v][j] = w;
                rot.push(vec![u, v]);
            }
            kind => {
                let g = Graph::from_adjacency(&rot).unwrap();
                let faces = trace_faces(&g);
                let face = faces.choose(rng).unwrap();
                let k = face.len();
                // corner i sits at face[i], between face[i-1] and face[i+1]
                let corner = |i: usize| (face[i], face[(i + k - 1) % k]);
                let i = rng.gen_range(0..k);
                let (x, before_x) = corner(i);
                if rot[x].len() >= 3 {
                    continue;
                }
                if kind == 1 {
                    let w = rot.len();
                    insert_after(&mut rot[x], before_x, w);
                    rot.push(vec![x]);
                } else {
                    let j = rng.gen_range(0..k);
                    let (y, before_y) = corner(j);
                    if x == y || rot[y].len() >= 3 || rot[x].contains(&y) {
                        continue;
                    }
                    insert_after(&mut rot[x], before_x, y);
                    insert_after(&mut rot[y], before_y, x);
                }
            }
        }
    }
    let g = Graph::from_adjacency(&rot).unwrap();
    PlanarEmbedding::new(g).expect("face operations keep the embedding planar")
}

fn insert_after(list: &mut Vec<Vertex>, after: Vertex, new: Vertex) {
    let p = list.iter().position(|&x| x == after).unwrap();
    list.insert(p + 1, new);
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<Vertex> {
    let mut p: Vec<Vertex> = (0..n).collect();
    p.shuffle(rng);
    p
}

// ---------------------------------------------------------------- oracles

/// Smallest edge set of size at most 5 whose removal leaves two components
/// that each contain a cycle, by exhaustive enumeration.
pub fn brute_cyclic_connectivity(g: &Graph) -> Option<usize> {
    let edges = g.edges();
    let mut removed = vec![false; edges.len()];
    (1..=5).find(|&k| subsets(&edges, &mut removed, 0, k, &|r| cyclic_components(g, &edges, r) >= 2))
}

fn subsets(
    edges: &[(Vertex, Vertex)],
    removed: &mut Vec<bool>,
    from: usize,
    left: usize,
    test: &dyn Fn(&[bool]) -> bool,
) -> bool {
    if left == 0 {
        return test(removed);
    }
    for i in from..=edges.len().saturating_sub(left) {
        removed[i] = true;
        let hit = subsets(edges, removed, i + 1, left - 1, test);
        removed[i] = false;
        if hit {
            return true;
        }
    }
    false
}

fn cyclic_components(g: &Graph, edges: &[(Vertex, Vertex)], removed: &[bool]) -> usize {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut kept_edges = Vec::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        if !removed[i] {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
            }
            kept_edges.push(u);
        }
    }
    let mut vertices = vec![0usize; n];
    let mut comp_edges = vec![0usize; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        vertices[r] += 1;
    }
    for u in kept_edges {
        let r = find(&mut parent, u);
        comp_edges[r] += 1;
    }
    (0..n)
        .filter(|&r| vertices[r] > 0 && comp_edges[r] >= vertices[r])
        .count()
}

/// Number of adjacency-preserving permutations, by backtracking.
pub fn brute_automorphism_count(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let order = search_order(g);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn count(g: &Graph, order: &[Vertex], depth: usize, map: &mut [usize], used: &mut [bool]) -> u64 {
        if depth == order.len() {
            return 1;
        }
        let v = order[depth];
        let mut total = 0;
        for x in 0..g.vertex_count() {
            if used[x] || g.degree(x) != g.degree(v) {
                continue;
            }
            if order[..depth]
                .iter()
                .all(|&u| g.has_edge(v, u) == g.has_edge(x, map[u]))
            {
                map[v] = x;
                used[x] = true;
                total += count(g, order, depth + 1, map, used);
                used[x] = false;
            }
        }
        total
    }
    count(g, &order, 0, &mut map, &mut used)
}

/// Shortest cycle as the minimum over edges `uv` of one plus the `u`-`v`
/// distance avoiding `uv`.
pub fn brute_girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    g.edges()
        .into_iter()
        .filter_map(|(u, v)| {
            let mut dist = vec![usize::MAX; n];
            dist[u] = 0;
            let mut q = VecDeque::from([u]);
            while let Some(x) = q.pop_front() {
                for &y in g.neighbors(x) {
                    if (x == u && y == v) || dist[y] != usize::MAX {
                        continue;
                    }
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
            }
            (dist[v] != usize::MAX).then(|| dist[v] + 1)
        })
        .min()
}

// ---------------------------------------------------------------- plantri

/// `PLANTRI`, then the workspace's `tools/bin/plantri`, then `PATH`.
pub fn plantri() -> Option<PathBuf> {
    if let Some(p) = std::env::var_os("PLANTRI") {
        return Some(PathBuf::from(p));
    }
    let local = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../tools/bin/plantri");
    if local.is_file() {
        return Some(local);
    }
    std::env::var_os("PATH").and_then(|paths| {
        std::env::split_paths(&paths)
            .map(|d| d.join("plantri"))
            .find(|p| p.is_file())
    })
}

/// planar_code file of all planar cubic graphs on `n` vertices with girth 5
/// and cyclic connectivity at least `min_cyclic` (4 or 5), generated on
/// first use as duals of triangulations with minimum degree 5.
pub fn census_file(n: usize, min_cyclic: u8) -> Option<PathBuf> {
    let plantri = plantri()?;
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("census");
    std::fs::create_dir_all(&dir).ok()?;
    let path = dir.join(format!("m5c{min_cyclic}_n{n}.pc"));
    if path.is_file() {
        return Some(path);
    }
    let partial = dir.join(format!("m5c{min_cyclic}_n{n}.pc.{}", std::process::id()));
    let faces = n / 2 + 2;
    let status = Command::new(plantri)
        .arg(format!("-m5c{min_cyclic}d"))
        .arg(faces.to_string())
        .arg(&partial)
        .stderr(std::process::Stdio::null())
        .status()
        .ok()?;
    if !status.success() {
        return None;
    }
    std::fs::rename(&partial, &path).ok()?;
    Some(path)
}
