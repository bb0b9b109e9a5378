//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::time::{Duration, Instant};

use common::{brute_force_rulings, plat_front_from_choices, pretzel_3_3_m3, random_braid, random_front};
use legfill::audit::{audit, FillingStatus};
use legfill::braid::BraidWord;
use legfill::cobordism::{construct_filling, replay_script};
use legfill::corpus::{corpus_all, corpus_get};
use legfill::front::{tanaka_orientation, Front, OrientedFront};
use legfill::homfly::{homfly, homfly_tb_bound, max_framing_degree, PlanarDiagram};
use legfill::ruling::{enumerate_rulings, find_all_switched_oriented, normal_rulings, unlinked_resolution};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:?}, limit {limit:?}"))
}

fn p(w: &BraidWord) -> legfill::homfly::HomflyPoly {
    homfly(&PlanarDiagram::from_braid(w))
}

fn trefoil_rulings() -> Outcome {
    let start = Instant::now();
    let f = corpus_get("trefoil").unwrap().front;
    let all = enumerate_rulings(&f, false);
    let oriented = enumerate_rulings(&f, true);
    within(start, Duration::from_secs(1))?;
    ensure(all.len() == 3, || format!("{} rulings", all.len()))?;
    ensure(oriented == all, || format!("{} oriented", oriented.len()))?;
    Ok("3 normal rulings, all oriented".into())
}

fn stoimenow() -> Outcome {
    let start = Instant::now();
    let fx = corpus_get("stoimenow").unwrap();
    let w = fx.bands.expand();
    ensure(fx.bands.bands().len() == 11 && w.strands() == 4 && w.is_knot(), || {
        "expansion is not a 4-braid knot".into()
    })?;
    let chi4 = fx.bands.chi4();
    ensure(chi4 == -7, || format!("chi4={chi4}"))?;
    let poly = p(&w);
    let deg = max_framing_degree(&poly).map_err(|e| e.to_string())?;
    let bound = homfly_tb_bound(&poly).map_err(|e| e.to_string())?;
    ensure((deg, bound) == (-10, 9), || format!("degree={deg} bound={bound}"))?;
    let r = audit("stoimenow", &fx.bands, &fx.front, &fx.script).map_err(|e| e.to_string())?;
    ensure(!r.bound_sharp, || "bound reported sharp".into())?;
    ensure(matches!(r.filling, FillingStatus::RuledOut { .. }), || format!("filling={}", r.filling.name()))?;
    within(start, Duration::from_secs(60))?;
    Ok(format!("chi4=-7 degree=-10 bound=9 RuledOut in {:?}", start.elapsed()))
}

fn positive_fillings() -> Outcome {
    let mut parts = Vec::new();
    for (label, k) in [("trefoil", 1i64), ("torus-2-5", 2), ("torus-2-7", 3)] {
        let start = Instant::now();
        let fx = corpus_get(label).unwrap();
        let of = tanaka_orientation(fx.front.front()).unwrap_or(fx.front.clone());
        let t = construct_filling(&of).map_err(|e| format!("{label}: {e}"))?;
        within(start, Duration::from_secs(5))?;
        let f = of.front();
        let expect = f.left_cusp_events().len() as i64 - f.crossing_count() as i64;
        ensure(t.euler == expect, || format!("{label}: chi={} expected {expect}", t.euler))?;
        ensure(t.euler == 2 - (2 * k + 1), || format!("{label}: chi={} expected {}", t.euler, 1 - 2 * k))?;
        ensure(t.end().tb() == -t.euler && of.tb() == -t.euler, || format!("{label}: tb={}", of.tb()))?;
        parts.push(format!("{label} chi={}", t.euler));
    }
    Ok(parts.join(", "))
}

fn m946() -> Outcome {
    let fx = corpus_get("m946").unwrap();
    let t = replay_script(&fx.script).map_err(|e| e.to_string())?;
    let end = t.end();
    ensure(end.tb() == -1, || format!("tb={}", end.tb()))?;
    ensure(t.euler == 1 && t.genus() == Some(0), || format!("chi={} genus={:?}", t.euler, t.genus()))?;
    let from_front = homfly(&end.to_planar_diagram());
    let from_braid = p(&fx.braid);
    ensure(from_front == from_braid, || format!("front {from_front} vs braid {from_braid}"))?;
    let pretzel = homfly(&pretzel_3_3_m3()).mirror();
    ensure(from_front == pretzel, || format!("front {from_front} vs mirrored pretzel {pretzel}"))?;
    Ok(format!("tb=-1 chi=1 genus=0 homfly={from_front}"))
}

fn braid_invariance(rng: &mut ChaCha8Rng) -> Outcome {
    let trials = 200;
    for _ in 0..trials {
        let w = random_braid(rng, 4, 8);
        let base = p(&w);
        let n = w.strands() as i32;
        let g = rng.gen_range(1..n) * if rng.gen() { 1 } else { -1 };
        let conj = BraidWord::new(w.strands(), [vec![g], w.letters().to_vec(), vec![-g]].concat()).unwrap();
        ensure(p(&conj) == base, || format!("conjugation by {g} changes {:?}", w.letters()))?;
        let sign = if rng.gen() { 1 } else { -1 };
        ensure(p(&w.stabilized(sign)) == base, || format!("stabilization changes {:?}", w.letters()))?;
    }
    Ok(format!("{trials} braids"))
}

fn ruling_oracle(rng: &mut ChaCha8Rng) -> Outcome {
    let mut fronts: Vec<Front> =
        corpus_all().into_iter().map(|fx| fx.front.into_front()).filter(|f| f.crossing_count() <= 6).collect();
    let corpus = fronts.len();
    for i in 0..50 {
        let f = if i % 2 == 0 {
            random_front(rng, 6, 6)
        } else {
            let l: Vec<u8> = (0..rng.gen_range(1..4)).map(|_| rng.gen()).collect();
            let x: Vec<u8> = (0..rng.gen_range(0..7)).map(|_| rng.gen()).collect();
            let r: Vec<u8> = (0..3).map(|_| rng.gen()).collect();
            plat_front_from_choices(&l, &x, &r)
        };
        fronts.push(f);
    }
    let mut rulings = 0;
    for f in &fronts {
        let got: Vec<Vec<usize>> = normal_rulings(f).into_iter().map(|r| r.switches).collect();
        let want = brute_force_rulings(f);
        ensure(got == want, || format!("mismatch on {}", f.to_string().replace('\n', " / ")))?;
        rulings += got.len();
    }
    Ok(format!("{corpus} corpus + 50 random fronts, {rulings} rulings"))
}

fn skein(rng: &mut ChaCha8Rng) -> Outcome {
    let mut done = 0;
    while done < 50 {
        let w = random_braid(rng, 4, 6);
        let pd = if done % 2 == 0 {
            PlanarDiagram::from_braid(&w)
        } else {
            OrientedFront::canonical(random_front(rng, 6, 6)).to_planar_diagram()
        };
        if pd.crossing_count() == 0 {
            continue;
        }
        let i = rng.gen_range(0..pd.crossing_count());
        let other = pd.switched(i).map_err(|e| e.to_string())?;
        let (plus, minus) = if pd.crossings()[i].sign > 0 { (&pd, &other) } else { (&other, &pd) };
        let lhs = homfly(plus).shifted(1, 1, 0) + homfly(minus).shifted(-1, -1, 0);
        let rhs = homfly(&pd.smoothed(i).map_err(|e| e.to_string())?).shifted(1, 0, 1);
        ensure(lhs == rhs, || format!("identity fails at crossing {i}"))?;
        done += 1;
    }
    Ok("50 diagrams".into())
}

fn bound_dominance() -> Outcome {
    let mut parts = Vec::new();
    for fx in corpus_all() {
        let bound = homfly_tb_bound(&homfly(&fx.front.to_planar_diagram())).map_err(|e| e.to_string())?;
        let tb = fx.front.tb();
        ensure(tb <= bound, || format!("{}: tb={tb} bound={bound}", fx.label))?;
        parts.push(format!("{}:{tb}<={bound}", fx.label));
    }
    Ok(parts.join(" "))
}

fn calibration() -> Outcome {
    let poly = p(&BraidWord::new(2, vec![1, 1, 1]).unwrap());
    let deg = max_framing_degree(&poly).map_err(|e| e.to_string())?;
    let bound = homfly_tb_bound(&poly).map_err(|e| e.to_string())?;
    ensure((deg, bound) == (-2, 1), || format!("degree={deg} bound={bound}"))?;
    Ok("degree=-2 bound=1".into())
}

fn ruling_pipeline() -> Outcome {
    let mut passed = Vec::new();
    for fx in corpus_all() {
        let Some(of) = tanaka_orientation(fx.front.front()) else { continue };
        if !of.check_tanaka_form() {
            continue;
        }
        let r =
            find_all_switched_oriented(&of).ok_or_else(|| format!("{}: no all-switched oriented ruling", fx.label))?;
        ensure(unlinked_resolution(of.front(), &r), || format!("{}: resolution is not an unlink of eyes", fx.label))?;
        passed.push(fx.label);
    }
    ensure(!passed.is_empty(), || "no corpus front is in the required form".into())?;
    Ok(passed.join(","))
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let criteria: Vec<(&str, Outcome)> = vec![
        ("1 trefoil rulings", trefoil_rulings()),
        ("2 stoimenow", stoimenow()),
        ("3 positive fillings", positive_fillings()),
        ("4 m946 script", m946()),
        ("5a braid invariance", braid_invariance(&mut rng)),
        ("5b ruling oracle", ruling_oracle(&mut rng)),
        ("5c skein identity", skein(&mut rng)),
        ("5d bound dominance", bound_dominance()),
        ("5e calibration", calibration()),
        ("6 ruling pipeline", ruling_pipeline()),
    ];
    let mut failed = 0;
    for (name, outcome) in &criteria {
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
