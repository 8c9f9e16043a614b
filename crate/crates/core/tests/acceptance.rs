//! End-to-end acceptance checks. Runs without the libtest harness so that
//! every criterion prints exactly one PASS/FAIL line.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use qschemoid::aschemoid::{
    asmd_elementary_homotopy, enumerate_asmd_morphisms, enumerate_involutions, verify_asmd_homotopy,
};
use qschemoid::constructors::{
    commuting_square, discrete_k, find_isomorphism, idempotent_chaotic, interval, iota, jmath, scheme_of_group, stilde,
};
use qschemoid::fincat::{cat_strong_homotopic, natural_transformation_exists, FinCat, FinGroup, Functor};
use qschemoid::haut::{aut_of_group, group_isomorphic, haut_group};
use qschemoid::homotopy::{
    collapse_obstruction, elementary_homotopy, enumerate_morphisms, homotopic, homotopy_classes, horizontal_compose,
    horizontal_compose_swapped, is_contractible, thin_homotopy_criterion, vertical_compose, ChainStep, HomotopyChain,
    MorphismUniverse,
};
use qschemoid::io::{emit_schemoid, parse_document, parse_schemoid};
use qschemoid::schemoid::{AssocScheme, QSchemoid, SchemoidMorphism};
use qschemoid::search::{enumerate_functors, SearchCaps};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Every fixture lifted to a quasi-schemoid, in file-name order.
fn schemoid_fixtures() -> Vec<(String, QSchemoid)> {
    let mut names: Vec<String> = std::fs::read_dir(fixture_dir())
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    names
        .into_iter()
        .map(|n| {
            let doc = parse_document(&read_fixture(&n)).unwrap_or_else(|e| panic!("{n}: {e}"));
            (n, doc.to_schemoid())
        })
        .collect()
}

fn caps() -> SearchCaps {
    SearchCaps::default()
}

fn z2xz2() -> FinGroup {
    FinGroup::cyclic(2).product(&FinGroup::cyclic(2))
}

fn criterion_1() -> Outcome {
    for n in [3, 4] {
        let h = haut_group(&jmath(&AssocScheme::trivial(n)), &caps()).map_err(|e| e.to_string())?;
        let fact: usize = (1..=n).product();
        ensure(h.order() == fact, || format!("n = {n}: order {} != {fact}", h.order()))?;
        ensure(group_isomorphic(&h.group, &FinGroup::symmetric(n)), || format!("n = {n}: not Sym({n})"))?;
        ensure(h.quotient_is_well_defined(), || format!("n = {n}: quotient product not well defined"))?;
    }
    let h2 = haut_group(&jmath(&AssocScheme::trivial(2)), &caps()).map_err(|e| e.to_string())?;
    ensure(h2.order() == 1, || format!("n = 2: order {}", h2.order()))?;
    Ok("orders 6, 24 and 1".into())
}

fn criterion_2() -> Outcome {
    let groups = [
        ("Z/2", FinGroup::cyclic(2), 1),
        ("Z/3", FinGroup::cyclic(3), 2),
        ("Z/4", FinGroup::cyclic(4), 2),
        ("Z/2xZ/2", z2xz2(), 6),
    ];
    for (name, g, expected) in groups {
        let aut = aut_of_group(&g, &caps()).map_err(|e| e.to_string())?;
        ensure(aut.group.order() == expected, || format!("{name}: |Aut| = {}", aut.group.order()))?;
        let h = haut_group(&jmath(&scheme_of_group(&g)), &caps()).map_err(|e| e.to_string())?;
        ensure(group_isomorphic(&h.group, &aut.group), || format!("{name}: haut of order {} not ≅ Aut", h.order()))?;
    }
    Ok("Aut orders 1, 2, 2, 6 matched".into())
}

fn criterion_3() -> Outcome {
    let mut groups: Vec<(String, FinGroup)> = (1..=6).map(|n| (format!("Z/{n}"), FinGroup::cyclic(n))).collect();
    groups.push(("Z/2xZ/2".into(), z2xz2()));
    groups.push(("Sym(3)".into(), FinGroup::symmetric(3)));
    for (name, g) in &groups {
        let s = stilde(&iota(g));
        let j = jmath(&scheme_of_group(g));
        let (f, inv) = find_isomorphism(s.schemoid(), &j, &caps())
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{name}: no isomorphism"))?;
        ensure(f.is_isomorphism(s.schemoid(), &j), || format!("{name}: witness is not an isomorphism"))?;
        ensure(inv.after(&f) == SchemoidMorphism::identity(s.schemoid()), || format!("{name}: bad inverse"))?;
        ensure(f.after(&inv) == SchemoidMorphism::identity(&j), || format!("{name}: bad inverse"))?;
    }
    Ok(format!("{} groups", groups.len()))
}

fn criterion_4() -> Outcome {
    for n in 2..=5 {
        let q = idempotent_chaotic(n);
        let s = q.partition().block_by_name("sigma").ok_or("no block sigma")?;
        let one = q.partition().block_by_name("1").ok_or("no block 1")?;
        let table = [
            ((s, one, s), 1),
            ((s, s, one), 0),
            ((one, s, s), 1),
            ((one, one, s), 0),
            ((s, one, one), 0),
            ((one, s, one), 0),
            ((one, one, one), 1),
            ((s, s, s), n as u32),
        ];
        for ((a, b, mu), v) in table {
            // p^mu_{a b}
            ensure(q.p(a, b, mu) == v, || format!("n = {n}: p({a},{b},{mu}) = {} != {v}", q.p(a, b, mu)))?;
        }
        let c = is_contractible(&q, &caps())
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("n = {n}: not contractible"))?;
        c.chain.verify(&q, &q).map_err(|e| e.to_string())?;
        ensure(*c.chain.end() == SchemoidMorphism::constant(&q, &q, c.object), || "chain ends elsewhere".into())?;
    }
    Ok("n = 2..5 contractible, table exact".into())
}

fn criterion_5() -> Outcome {
    let q = parse_schemoid(&read_fixture("remark38.qsmd")).map_err(|e| e.to_string())?.schemoid;
    ensure(emit_schemoid(&q) == emit_schemoid(&commuting_square()), || {
        "fixture differs from the built example".into()
    })?;
    ensure(is_contractible(&q, &caps()).map_err(|e| e.to_string())?.is_none(), || "contractible".into())?;
    ensure(collapse_obstruction(&q).is_none(), || "obstruction fired".into())?;
    let c = q.cat();
    let id = Functor::identity(c);
    for x in [0, 3] {
        let k = Functor::constant(c, c, x);
        ensure(cat_strong_homotopic(c, c, &id, &k, &caps()).map_err(|e| e.to_string())?, || {
            format!("identity not strongly homotopic to const_{x}")
        })?;
    }
    Ok("not contractible, obstruction = false, categorical homotopy holds".into())
}

fn small_categories() -> Vec<(&'static str, FinCat)> {
    let z2 = FinCat::one_object(&[vec![0, 1], vec![1, 0]]).unwrap();
    let idem = FinCat::one_object(&[vec![0, 1], vec![1, 1]]).unwrap();
    vec![
        ("point", FinCat::terminal()),
        ("two points", FinCat::discrete(2)),
        ("three points", FinCat::discrete(3)),
        ("four points", FinCat::discrete(4)),
        ("[1]", FinCat::arrow()),
        ("[1] x [1]", FinCat::arrow().product(&FinCat::arrow())),
        ("Z/2", z2),
        ("idempotent", idem),
        ("chaotic 2", FinCat::chaotic(2)),
    ]
}

fn criterion_6() -> Outcome {
    let sources: Vec<_> = small_categories().into_iter().filter(|(_, c)| c.n_morphisms() <= 4).collect();
    let mut targets = small_categories();
    targets.push(("commuting square", commuting_square().cat().clone()));
    let mut pairs = 0usize;
    for (sn, c) in &sources {
        for (tn, d) in &targets {
            let (kc, kd) = (discrete_k(c), discrete_k(d));
            let functors = enumerate_functors(c, d, &caps()).map_err(|e| e.to_string())?;
            let universe = enumerate_morphisms(&kc, &kd, &caps()).map_err(|e| e.to_string())?;
            let same: Vec<&Functor> = universe.morphisms().iter().map(|m| &m.functor).collect();
            ensure(functors.iter().collect::<Vec<_>>() == same, || format!("{sn} -> {tn}: universes differ"))?;
            let classes = homotopy_classes(&kc, &kd, &universe);
            // categorical side: zigzags of natural transformations
            let n = functors.len();
            let mut zigzag: Vec<Vec<bool>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            i == j
                                || natural_transformation_exists(c, d, &functors[i], &functors[j]).unwrap()
                                || natural_transformation_exists(c, d, &functors[j], &functors[i]).unwrap()
                        })
                        .collect()
                })
                .collect();
            warshall(&mut zigzag);
            for i in 0..n {
                for j in 0..n {
                    let schemoid_side = classes.class_of[i] == classes.class_of[j];
                    ensure(schemoid_side == zigzag[i][j], || format!("{sn} -> {tn}: pair ({i},{j}) disagrees"))?;
                    if n <= 16 {
                        let direct = cat_strong_homotopic(c, d, &functors[i], &functors[j], &caps())
                            .map_err(|e| e.to_string())?;
                        ensure(direct == zigzag[i][j], || format!("{sn} -> {tn}: strong homotopy search disagrees"))?;
                    }
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} morphism pairs"))
}

/// Reachability under elementary homotopies in either direction, computed
/// with a plain Warshall closure.
fn closure(a: &QSchemoid, b: &QSchemoid, u: &MorphismUniverse) -> Vec<Vec<bool>> {
    let n = u.len();
    let mut r = vec![vec![false; n]; n];
    for i in 0..n {
        r[i][i] = true;
        for j in 0..n {
            if i != j && elementary_homotopy(a, b, u.get(i), u.get(j)).unwrap().is_some() {
                r[i][j] = true;
                r[j][i] = true;
            }
        }
    }
    warshall(&mut r);
    r
}

fn warshall(r: &mut [Vec<bool>]) {
    let n = r.len();
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                for j in 0..n {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
}

fn criterion_7() -> Outcome {
    let mut checked = Vec::new();
    for (name, q) in schemoid_fixtures() {
        let Ok(u) = enumerate_morphisms(&q, &q, &SearchCaps::with_universe(200)) else {
            continue;
        };
        let r = closure(&q, &q, &u);
        let classes = homotopy_classes(&q, &q, &u);
        let n = u.len();
        for i in 0..n {
            ensure(r[i][i], || format!("{name}: not reflexive"))?;
            for j in 0..n {
                ensure(r[i][j] == r[j][i], || format!("{name}: not symmetric"))?;
                ensure(r[i][j] == (classes.class_of[i] == classes.class_of[j]), || {
                    format!("{name}: classes disagree")
                })?;
                for k in 0..n {
                    ensure(!(r[i][j] && r[j][k]) || r[i][k], || format!("{name}: not transitive"))?;
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !r[i][j] {
                    continue;
                }
                let (f, g) = (u.get(i), u.get(j));
                for k in u.morphisms() {
                    let pos = |m: SchemoidMorphism| u.position(&m).expect("universe closed under composition");
                    ensure(r[pos(k.after(f))][pos(k.after(g))], || format!("{name}: post-composition breaks ≃"))?;
                    ensure(r[pos(f.after(k))][pos(g.after(k))], || format!("{name}: pre-composition breaks ≃"))?;
                }
                if i < j && (i + j) % 7 == 0 {
                    let chain = homotopic(&q, &q, f, g, &u).map_err(|e| e.to_string())?.ok_or("BFS missed a pair")?;
                    chain.verify(&q, &q).map_err(|e| e.to_string())?;
                }
            }
        }
        checked.push(format!("{name} ({n})"));
    }
    ensure(checked.len() >= 10, || format!("only {} fixtures small enough", checked.len()))?;
    Ok(format!("{} fixtures: {}", checked.len(), checked.join(", ")))
}

fn criterion_8() -> Outcome {
    let mut pairs = 0;
    for g in [FinGroup::cyclic(2), FinGroup::cyclic(3)] {
        let s = stilde(&iota(&g));
        let q = s.schemoid();
        let u = enumerate_morphisms(q, q, &caps()).map_err(|e| e.to_string())?;
        for f in u.morphisms() {
            for h in u.morphisms() {
                let thin = thin_homotopy_criterion(&s, &s, f, h).map_err(|e| e.to_string())?;
                let found = elementary_homotopy(q, q, f, h).map_err(|e| e.to_string())?.is_some();
                ensure(thin == found, || format!("order {}: criterion {thin}, search {found}", g.order()))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} ordered pairs"))
}

fn criterion_9() -> Outcome {
    let mut summary = Vec::new();
    for (name, q) in schemoid_fixtures().into_iter().filter(|(n, _)| n.starts_with("stilde_")) {
        let u = enumerate_morphisms(&q, &q, &caps()).map_err(|e| e.to_string())?;
        let classes = homotopy_classes(&q, &q, &u);
        let mut nontrivial = 0;
        for class in &classes.classes {
            for (x, &i) in class.iter().enumerate() {
                for &j in &class[x + 1..] {
                    let (f, g) = (u.get(i), u.get(j));
                    let direct = elementary_homotopy(&q, &q, f, g).map_err(|e| e.to_string())?.is_some()
                        || elementary_homotopy(&q, &q, g, f).map_err(|e| e.to_string())?.is_some();
                    ensure(direct, || format!("{name}: {i} ≃ {j} needs a longer chain"))?;
                    nontrivial += 1;
                }
            }
        }
        summary.push(format!("{name}: {} classes, {nontrivial} pairs", classes.len()));
    }
    ensure(summary.len() == 5, || format!("found {} stilde fixtures", summary.len()))?;
    Ok(summary.join("; "))
}

fn criterion_10() -> Outcome {
    for g in [FinGroup::cyclic(2), FinGroup::cyclic(3), FinGroup::cyclic(4), z2xz2(), FinGroup::symmetric(3)] {
        let s = stilde(&iota(&g));
        let q = s.schemoid();
        let h = haut_group(q, &caps()).map_err(|e| e.to_string())?;
        for &c in &h.unit_classes {
            for &m in &h.classes.classes[c] {
                let f = h.endo.universe.get(m);
                ensure(f.is_isomorphism(q, q), || format!("order {}: non-bijective self-equivalence", g.order()))?;
            }
        }
    }
    for n in 3..=5 {
        let h = haut_group(&jmath(&AssocScheme::trivial(n)), &caps()).map_err(|e| e.to_string())?;
        ensure(h.unit_classes.iter().all(|&c| h.classes.classes[c].len() == 1), || {
            format!("trivial-{n}: a haut class is not a singleton")
        })?;
    }
    Ok("all self-equivalences bijective, trivial-3..5 haut classes singletons".into())
}

fn criterion_11() -> Outcome {
    let mut pairs = 0;
    let mut names = Vec::new();
    for entry in std::fs::read_dir(fixture_dir()).unwrap() {
        let name = entry.unwrap().file_name().to_string_lossy().into_owned();
        if !name.ends_with(".qsmd") {
            continue;
        }
        let Some(a) = parse_schemoid(&read_fixture(&name)).map_err(|e| e.to_string())?.involution else {
            continue;
        };
        let all = enumerate_asmd_morphisms(&a, &a, &caps()).map_err(|e| e.to_string())?;
        for f in &all {
            for g in &all {
                let h = asmd_elementary_homotopy(&a, &a, f, g).map_err(|e| e.to_string())?;
                ensure(h.is_some() == (f == g), || format!("{name}: certificate iff equal fails"))?;
                if let Some(h) = h {
                    verify_asmd_homotopy(&a, &a, &h).map_err(|e| e.to_string())?;
                }
                pairs += 1;
            }
        }
        names.push(name);
    }
    ensure(names.len() >= 5, || format!("only {} ASchemoid fixtures", names.len()))?;
    let involutions = enumerate_involutions(&interval(), &caps()).map_err(|e| e.to_string())?;
    ensure(involutions.len() == 1, || format!("K([1]) has {} involutions", involutions.len()))?;
    names.sort();
    Ok(format!("{pairs} pairs over {}; K([1]) involution unique", names.join(", ")))
}

/// A universe together with its elementary-homotopy edges.
struct HomotopyGraph {
    universe: MorphismUniverse,
    edges: Vec<Vec<ChainStep>>,
}

fn homotopy_graph(a: &QSchemoid, b: &QSchemoid) -> HomotopyGraph {
    let universe = enumerate_morphisms(a, b, &caps()).unwrap();
    let n = universe.len();
    let mut edges = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if let Some(h) = elementary_homotopy(a, b, universe.get(i), universe.get(j)).unwrap() {
                edges[i].push(ChainStep { homotopy: h.clone(), forward: true });
                edges[j].push(ChainStep { homotopy: h, forward: false });
            }
        }
    }
    HomotopyGraph { universe, edges }
}

fn random_walk(graph: &HomotopyGraph, from: usize, len: usize, rng: &mut ChaCha8Rng) -> HomotopyChain {
    let mut at = from;
    let mut steps = Vec::new();
    for _ in 0..len {
        let out = &graph.edges[at];
        let step = out[rng.gen_range(0..out.len())].clone();
        at = graph.universe.position(step.target()).unwrap();
        steps.push(step);
    }
    HomotopyChain::from_steps(graph.universe.get(from).clone(), steps).unwrap()
}

fn criterion_12() -> Outcome {
    let objects = [
        interval(),
        idempotent_chaotic(2),
        jmath(&AssocScheme::trivial(2)),
        discrete_k(&FinCat::arrow()),
        stilde(&iota(&FinGroup::cyclic(2))).schemoid().clone(),
    ];
    let k = objects.len();
    let mut graphs: BTreeMap<(usize, usize), HomotopyGraph> = BTreeMap::new();
    for i in 0..k {
        for j in 0..k {
            graphs.insert((i, j), homotopy_graph(&objects[i], &objects[j]));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x2ca7);
    let samples = 1500;
    for s in 0..samples {
        let (c, d, e) = (rng.gen_range(0..k), rng.gen_range(0..k), rng.gen_range(0..k));
        let (gcd, gde, gce) = (&graphs[&(c, d)], &graphs[&(d, e)], &graphs[&(c, e)]);
        let (oc, od, oe) = (&objects[c], &objects[d], &objects[e]);
        let kappa = random_walk(gcd, rng.gen_range(0..gcd.universe.len()), rng.gen_range(0..4), &mut rng);
        let nu = random_walk(gde, rng.gen_range(0..gde.universe.len()), rng.gen_range(0..4), &mut rng);
        let one = horizontal_compose(oc, od, oe, &nu, &kappa).map_err(|e| format!("sample {s}: {e}"))?;
        let two = horizontal_compose_swapped(oc, od, oe, &nu, &kappa).map_err(|e| format!("sample {s}: {e}"))?;
        one.verify(oc, oe).map_err(|e| format!("sample {s}: {e}"))?;
        two.verify(oc, oe).map_err(|e| format!("sample {s}: {e}"))?;
        let start = nu.start().after(kappa.start());
        let end = nu.end().after(kappa.end());
        ensure(*one.start() == start && *two.start() == start, || format!("sample {s}: interchange start differs"))?;
        ensure(*one.end() == end && *two.end() == end, || format!("sample {s}: interchange end differs"))?;

        let h1 = random_walk(gce, rng.gen_range(0..gce.universe.len()), rng.gen_range(0..3), &mut rng);
        let p2 = gce.universe.position(h1.end()).unwrap();
        let h2 = random_walk(gce, p2, rng.gen_range(0..3), &mut rng);
        let p3 = gce.universe.position(h2.end()).unwrap();
        let h3 = random_walk(gce, p3, rng.gen_range(0..3), &mut rng);
        let left = vertical_compose(&vertical_compose(&h1, &h2).unwrap(), &h3).unwrap();
        let right = vertical_compose(&h1, &vertical_compose(&h2, &h3).unwrap()).unwrap();
        ensure(left == right, || format!("sample {s}: vertical composition not associative"))?;
        left.verify(oc, oe).map_err(|e| format!("sample {s}: {e}"))?;
    }
    Ok(format!("{samples} samples, zero failures"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("haut of trivial schemes is the permutation group", criterion_1),
        ("haut(jS(G)) is Aut(G)", criterion_2),
        ("stilde(iota G) is isomorphic to jS(G)", criterion_3),
        ("idempotent chaotic example is contractible", criterion_4),
        ("commuting square is not contractible", criterion_5),
        ("discrete schemoids follow categorical homotopy", criterion_6),
        ("homotopy is a congruence", criterion_7),
        ("thin criterion agrees with search", criterion_8),
        ("homotopic stilde morphisms are one step apart", criterion_9),
        ("rigidity of self-equivalences", criterion_10),
        ("association schemoid homotopy is rigid", criterion_11),
        ("2-category laws on random 2-cells", criterion_12),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let started = std::time::Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} ({title}): PASS [{detail}] {secs:.2}s", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({title}): FAIL [{why}] {secs:.2}s", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
