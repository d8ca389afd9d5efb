//! Acceptance run: one PASS/FAIL line per criterion. Runs without the test
//! harness so the lines are never captured.
//!
//! Wall-clock ratios depend on the host, so criterion 8 is printed but only
//! enforced when `PSEP_ENFORCE_TIMING` is set. Everything else must pass.

use std::collections::HashSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use psep::assembly::Separation;
use psep::layers::{boundary_cycles, face_levels, LevelDecomposition};
use psep::oracle::{
    bfs_distances, brute_force_tree_cut, enclosed_vertices, flood_fill_faces, verify_separator, CheckKind,
};
use psep::{
    balanced_edge_cut, gen_apollonian, gen_flipped, gen_pillow, separate, vertices_inside, Cycle, FreeTree,
    PlanarEmbedding, SeparatorReport,
};

struct Outcome {
    failures: Vec<String>,
    note: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            failures: Vec::new(),
            note: String::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        }
    }
}

fn report(id: usize, title: &str, o: &Outcome) -> bool {
    let pass = o.failures.is_empty();
    println!(
        "criterion {id} {title}: {} {}",
        if pass { "PASS" } else { "FAIL" },
        o.note
    );
    for f in &o.failures {
        println!("    {f}");
    }
    pass
}

struct Instance {
    label: String,
    g: PlanarEmbedding,
    sep: Separation,
}

fn sweep() -> Vec<Instance> {
    let mut out = Vec::new();
    for n in [1_000, 10_000, 100_000] {
        for seed in 0..20 {
            for (kind, g) in [
                ("apollonian", gen_apollonian(n, seed).unwrap()),
                ("flipped", gen_flipped(n, 3 * n, seed).unwrap()),
            ] {
                let sep = separate(&g).unwrap();
                out.push(Instance {
                    label: format!("{kind} n={n} seed={seed}"),
                    g,
                    sep,
                });
            }
        }
    }
    out
}

/// `⌈√(n/2)⌉` as the least `d` with `2d² ≥ n`.
fn ceil_sqrt_half(n: usize) -> usize {
    (1..).find(|&d| 2 * d * d >= n).unwrap()
}

fn criterion_1(all: &[Instance]) -> Outcome {
    let mut o = Outcome::new();
    let mut worst: f64 = 0.0;
    for inst in all {
        let n = inst.g.n();
        let len = inst.sep.report.length;
        let delta = ceil_sqrt_half(n);
        let sqrt_bound = (8.0 * n as f64).sqrt() + 4.0;
        let ladder_bound = 2 * delta + n.div_ceil(delta);
        worst = worst.max(len as f64 / sqrt_bound);
        o.check(len as f64 <= sqrt_bound && len <= ladder_bound, || {
            format!(
                "{}: length {len}, bounds {sqrt_bound:.2} and {ladder_bound}",
                inst.label
            )
        });
    }
    o.note = format!("({} instances, max length/(sqrt(8n)+4) = {worst:.3})", all.len());
    o
}

fn criterion_2_and_3(all: &[Instance]) -> (Outcome, Outcome) {
    let (mut faces, mut verts) = (Outcome::new(), Outcome::new());
    for inst in all {
        let (g, rep) = (&inst.g, &inst.sep.report);
        let ft = &inst.sep.faces;
        let n = g.n();
        let total = 2 * n - 4;
        let cap = (2 * total).div_ceil(3);
        let sides = flood_fill_faces(g, ft, rep.cycle.vertices()).unwrap();
        let (fin, fout) = (sides.inside.len(), sides.outside.len());
        faces.check(
            ft.len() == total && fin <= cap && fout <= cap && fin == rep.faces_inside,
            || {
                format!(
                    "{}: faces {fin}/{fout} (reported {}), cap {cap}",
                    inst.label, rep.faces_inside
                )
            },
        );
        let verdict = verify_separator(g, ft, rep);
        faces.check(verdict.check(CheckKind::FaceBalance).is_some_and(|c| c.passed), || {
            format!("{}: verifier rejects face balance", inst.label)
        });

        let vin = enclosed_vertices(ft, &sides, rep.cycle.vertices()).len();
        let vout = n - vin - rep.cycle.vertices().len();
        let vcap = 2 * n / 3 + 1;
        verts.check(vin <= vcap && vout <= vcap, || {
            format!("{}: vertices {vin}/{vout}, cap {vcap}", inst.label)
        });
        verts.check(vertices_inside(fin, rep.length).ok() == Some(vin), || {
            format!("{}: closed form disagrees with direct count {vin}", inst.label)
        });
    }
    faces.note = format!("({} instances)", all.len());
    verts.note = format!("({} instances)", all.len());
    (faces, verts)
}

fn edge_set(path: &[u32]) -> HashSet<(u32, u32)> {
    path.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))).collect()
}

fn criterion_4(all: &[Instance]) -> Outcome {
    let mut o = Outcome::new();
    for inst in all {
        let (g, fc) = (&inst.g, &inst.sep.root_cycle);
        let ft = &inst.sep.faces;
        let total = ft.len();
        let cap = (2 * total).div_ceil(3);
        let sides = flood_fill_faces(g, ft, fc.cycle.vertices()).unwrap();
        o.check(
            sides.inside.len() <= cap && sides.outside.len() <= cap && sides.inside.len() == fc.faces_inside,
            || {
                format!(
                    "{}: S sides {}/{}, cap {cap}",
                    inst.label,
                    sides.inside.len(),
                    sides.outside.len()
                )
            },
        );
        o.check(edge_set(&fc.p_u).is_disjoint(&edge_set(&fc.p_v)), || {
            format!("{}: p_u and p_v share an edge", inst.label)
        });
        o.check(bfs_distances(g, fc.root()) == fc.tree.rdist, || {
            format!("{}: re-rooted depths differ from BFS distances", inst.label)
        });
    }
    o.note = format!("({} instances)", all.len());
    o
}

/// Mixed instances with n <= 10^4, a third of them deep pillows.
fn layered_instances() -> Vec<(String, PlanarEmbedding)> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    (0..200)
        .map(|i| {
            let seed = rng.gen::<u64>();
            match i % 3 {
                0 => {
                    let n = rng.gen_range(50..=10_000);
                    (
                        format!("apollonian n={n} seed={seed}"),
                        gen_apollonian(n, seed).unwrap(),
                    )
                }
                1 => {
                    let n = rng.gen_range(50..=10_000);
                    (
                        format!("flipped n={n} seed={seed}"),
                        gen_flipped(n, 3 * n, seed).unwrap(),
                    )
                }
                _ => {
                    let w = rng.gen_range(6..=20);
                    let h = rng.gen_range(4 * w..=240);
                    let h = h.min(9_000 / (2 * w));
                    let blob = rng.gen_range(0..=500);
                    let flips = rng.gen_range(0..=4 * h);
                    let label = format!("pillow {w}x{h} blob={blob} flips={flips} seed={seed}");
                    (label, gen_pillow(w, h, blob, flips, seed).unwrap())
                }
            }
        })
        .collect()
}

fn decomposition(g: &PlanarEmbedding, sep: &Separation) -> LevelDecomposition {
    if let Some(layers) = &sep.layers {
        return layers.decomposition.clone();
    }
    let fc = &sep.root_cycle;
    let levels = face_levels(&sep.faces, &fc.tree);
    boundary_cycles(g, &sep.faces, &levels, &fc.tree, fc.deep_path()).unwrap()
}

fn is_simple(g: &PlanarEmbedding, c: &Cycle) -> bool {
    let vs = c.vertices();
    let distinct: HashSet<u32> = vs.iter().copied().collect();
    distinct.len() == vs.len() && vs.len() != 2 && c.edges().all(|(a, b)| g.rotation(a).contains(&b))
}

fn criteria_5_and_6(instances: &[(String, PlanarEmbedding)]) -> (Outcome, Outcome) {
    let (mut layer, mut ladder) = (Outcome::new(), Outcome::new());
    let (mut cycles_checked, mut ladders) = (0usize, 0usize);
    for (label, g) in instances {
        let sep = separate(g).unwrap();
        let fc = &sep.root_cycle;
        let dist = bfs_distances(g, fc.root());
        let on_s: HashSet<u32> = fc.cycle.vertices().iter().copied().collect();
        let dec = decomposition(g, &sep);
        let mut used = HashSet::new();
        for (i, c) in dec.cycles.iter().enumerate() {
            cycles_checked += 1;
            layer.check(is_simple(g, c), || format!("{label}: C_{i} not simple"));
            layer.check(c.vertices().iter().all(|&x| dist[x as usize] as usize == i), || {
                format!("{label}: C_{i} has a vertex off depth {i}")
            });
            layer.check(c.vertices().iter().all(|&x| used.insert(x)), || {
                format!("{label}: C_{i} meets an earlier cycle")
            });
            layer.check(c.vertices().iter().any(|x| on_s.contains(x)), || {
                format!("{label}: C_{i} misses S")
            });
        }

        let Some(layers) = &sep.layers else { continue };
        ladders += 1;
        let (lad, n) = (&layers.ladder, g.n());
        let delta = lad.delta;
        let mut weights = vec![0usize; delta];
        for (i, c) in dec.cycles.iter().enumerate() {
            weights[i % delta] += c.vertices().len();
        }
        let min = *weights.iter().min().unwrap();
        ladder.check(weights == lad.weights, || format!("{label}: offset weights differ"));
        ladder.check(lad.weight() == min && min > 0 && min * delta <= n, || {
            format!("{label}: g(i0) = {}, min {min}, delta {delta}, n {n}", lad.weight())
        });
        for j in 1..lad.k {
            let rung = &lad.rungs[j];
            if rung.is_trivial() {
                continue;
            }
            let sides = flood_fill_faces(g, &sep.faces, rung.vertices()).unwrap();
            // The root side is whichever side holds a face at the root.
            let root_face = sep.faces.left_face[g.out_edges(fc.root()).start as usize];
            let root_side = if sides.inside.contains(&root_face) {
                sides.inside.len()
            } else {
                sides.outside.len()
            };
            ladder.check(root_side == layers.counts.faces_within[j], || {
                format!(
                    "{label}: rung {j} encloses {root_side}, counted {}",
                    layers.counts.faces_within[j]
                )
            });
        }
    }
    layer.check(cycles_checked > 0, || "no cycles checked".into());
    ladder.check(ladders > 0, || "ladder branch never reached".into());
    layer.note = format!("({} instances, {cycles_checked} boundary cycles)", instances.len());
    ladder.note = format!("({ladders} instances reached the ladder)");
    (layer, ladder)
}

fn random_tree(rng: &mut ChaCha8Rng, m: usize, d: usize) -> FreeTree {
    let mut degree = vec![0usize; m];
    let mut edges = Vec::with_capacity(m - 1);
    for x in 1..m {
        let open: Vec<usize> = (0..x).filter(|&y| degree[y] < d).collect();
        let y = open[rng.gen_range(0..open.len())];
        degree[x] += 1;
        degree[y] += 1;
        edges.push((y as u32, x as u32));
    }
    FreeTree::from_edges(m, &edges).unwrap().with_degree_bound(d).unwrap()
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..1000 {
        let d = [2, 3, 4, 5][i % 4];
        let m = rng.gen_range(2..=50);
        let t = random_tree(&mut rng, m, d);
        let cut = balanced_edge_cut(&t).unwrap();
        let oracle = brute_force_tree_cut(&t).unwrap();
        o.check(cut.larger_side() <= oracle.bound, || {
            format!("tree {i} (m={m}, d={d}): side {} > {}", cut.larger_side(), oracle.bound)
        });
        o.check(oracle.feasible.contains(&cut.edge), || {
            format!("tree {i} (m={m}, d={d}): edge {} not feasible", cut.edge)
        });
    }
    o.note = "(1000 trees)".into();
    o
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let k = xs.len();
    if k % 2 == 1 {
        xs[k / 2]
    } else {
        (xs[k / 2 - 1] + xs[k / 2]) / 2.0
    }
}

fn timed(n: usize, seed: u64) -> f64 {
    let g = gen_apollonian(n, seed).unwrap();
    let start = Instant::now();
    let sep = separate(&g).unwrap();
    let secs = start.elapsed().as_secs_f64();
    assert!(sep.report.length > 0);
    secs
}

/// Returns (ratio check, million-vertex check).
fn criterion_8() -> (Outcome, bool) {
    let mut o = Outcome::new();
    timed(100_000, 99);
    let small = median((0..10).map(|s| timed(100_000, s)).collect());
    let large = median((0..10).map(|s| timed(400_000, s)).collect());
    let ratio = large / small;
    let million = timed(1_000_000, 0);
    o.check(ratio <= 5.0, || {
        format!(
            "median t(4e5)/t(1e5) = {:.1} ms / {:.1} ms = {ratio:.2} > 5",
            large * 1e3,
            small * 1e3
        )
    });
    o.check(million < 10.0, || format!("n = 10^6 took {million:.2} s"));
    o.note = format!(
        "(ratio {ratio:.2}: {:.1} ms / {:.1} ms; n=10^6 in {million:.2} s)",
        large * 1e3,
        small * 1e3
    );
    (o, million < 10.0)
}

type Mutation = fn(&PlanarEmbedding, &mut SeparatorReport) -> bool;

fn non_neighbor(g: &PlanarEmbedding, of: &[u32]) -> u32 {
    (0..g.n() as u32)
        .find(|&x| !of.contains(&x) && of.iter().all(|&y| !g.rotation(y).contains(&x)))
        .expect("a far vertex exists")
}

fn mutations() -> Vec<(&'static str, Mutation)> {
    vec![
        ("dropped vertex", |_, r| {
            let mut vs = r.cycle.vertices().to_vec();
            vs.remove(vs.len() / 2);
            r.cycle = Cycle::new(vs);
            true
        }),
        ("duplicated vertex", |_, r| {
            let mut vs = r.cycle.vertices().to_vec();
            vs.insert(1, vs[0]);
            r.cycle = Cycle::new(vs);
            r.length += 1;
            r.vertices_on += 1;
            true
        }),
        ("swapped face counts", |_, r| {
            std::mem::swap(&mut r.faces_inside, &mut r.faces_outside);
            r.faces_inside != r.faces_outside
        }),
        ("faces shifted by 2", |_, r| {
            r.faces_inside += 2;
            r.faces_outside -= 2;
            true
        }),
        ("length off by one", |_, r| {
            r.length += 1;
            true
        }),
        ("vertex counts", |_, r| {
            r.vertices_inside += 1;
            r.vertices_outside -= 1;
            true
        }),
        ("vertices_on", |_, r| {
            r.vertices_on -= 1;
            r.vertices_outside += 1;
            true
        }),
        ("non-edge substitution", |g, r| {
            let mut vs = r.cycle.vertices().to_vec();
            let k = vs.len();
            let around = [vs[k - 1], vs[0], vs[1]];
            vs[0] = non_neighbor(g, &around);
            r.cycle = Cycle::new(vs);
            true
        }),
        ("unbalanced facial triangle", |g, r| {
            let far = non_neighbor(g, &g.outer_face());
            let a = far;
            let b = g.rotation(a)[0];
            let c = g.rotation(a)[1];
            let f = 2 * g.n() - 4;
            *r = SeparatorReport {
                n: g.n(),
                cycle: Cycle::new(vec![a, b, c]),
                faces_inside: 1,
                faces_outside: f - 1,
                vertices_inside: 0,
                vertices_outside: g.n() - 3,
                vertices_on: 3,
                length: 3,
                branch: r.branch,
                delta: r.delta,
            };
            true
        }),
        ("wrong n", |_, r| {
            r.n += 1;
            true
        }),
    ]
}

fn criterion_9() -> Outcome {
    let mut o = Outcome::new();
    let mut detected = 0usize;
    let mut applied = 0usize;
    let mut graphs = Vec::new();
    for seed in 0..10 {
        graphs.push(gen_apollonian(2_000, seed).unwrap());
        graphs.push(gen_flipped(2_000, 6_000, seed).unwrap());
    }
    graphs.push(gen_pillow(12, 80, 0, 160, 3).unwrap());
    graphs.push(gen_pillow(12, 80, 0, 160, 1).unwrap());
    for g in &graphs {
        let sep = separate(g).unwrap();
        let clean = verify_separator(g, &sep.faces, &sep.report);
        o.check(clean.passed(), || format!("honest report rejected: {clean}"));
        for (name, mutate) in mutations() {
            let mut rep = sep.report.clone();
            if !mutate(g, &mut rep) {
                continue;
            }
            applied += 1;
            if verify_separator(g, &sep.faces, &rep).passed() {
                o.check(false, || format!("{name} not detected on n={}", g.n()));
            } else {
                detected += 1;
            }
        }
    }
    o.note = format!("({detected}/{applied} mutants detected, 10 kinds)");
    o
}

fn main() {
    let mut pass = Vec::new();

    let all = sweep();
    pass.push(report(1, "length bound", &criterion_1(&all)));
    let (faces, verts) = criterion_2_and_3(&all);
    pass.push(report(2, "face balance", &faces));
    pass.push(report(3, "vertex balance", &verts));
    pass.push(report(4, "fundamental cycle", &criterion_4(&all)));
    drop(all);

    let instances = layered_instances();
    let (layer, ladder) = criteria_5_and_6(&instances);
    pass.push(report(5, "layer structure", &layer));
    pass.push(report(6, "ladder bound", &ladder));
    drop(instances);

    pass.push(report(7, "tree cut", &criterion_7()));

    let (timing, million_ok) = criterion_8();
    let timing_pass = report(8, "linear time", &timing);
    if std::env::var_os("PSEP_ENFORCE_TIMING").is_some() {
        pass.push(timing_pass);
    } else {
        pass.push(million_ok);
    }

    pass.push(report(9, "oracle fault injection", &criterion_9()));

    let failed: Vec<usize> = (1..=9).filter(|&i| !pass[i - 1]).collect();
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
