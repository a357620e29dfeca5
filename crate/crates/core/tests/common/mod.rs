#![allow(dead_code)]

use std::path::PathBuf;

use dilink::diagram::{
    parse_scene, validate_scene, Color, CrossingSign, CurvePresentation, KnotPresentation,
    OverKind, Scene,
};
use dilink::linalg::{int, Rational};
use dilink::PreparedScene;
use rand::Rng;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn load(name: &str) -> Scene {
    let text = std::fs::read_to_string(data_path(name)).expect("test data file");
    parse_scene(&text).expect("test data parses")
}

pub fn prepared(name: &str) -> PreparedScene {
    PreparedScene::new(load(name)).expect("test data is structurally valid")
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

pub fn kinds(s: &str) -> Vec<OverKind> {
    s.chars()
        .map(|c| match c {
            'k' => OverKind::Knot,
            'p' => OverKind::Pseudo,
            _ => panic!("bad kind {c}"),
        })
        .collect()
}

pub fn signs(v: &[i64]) -> Vec<CrossingSign> {
    v.iter().map(|&x| CrossingSign::new(x).unwrap()).collect()
}

pub fn knot(colors: &[i64], nums: &[usize], k: &str, s: &[i64]) -> KnotPresentation {
    KnotPresentation {
        colors: colors.iter().map(|&c| Color::new(c).unwrap()).collect(),
        over_nums: nums.to_vec(),
        over_kinds: kinds(k),
        signs: signs(s),
    }
}

pub fn curve(nums: &[usize], k: &str, s: &[i64]) -> CurvePresentation {
    CurvePresentation {
        over_nums: nums.to_vec(),
        over_kinds: kinds(k),
        signs: signs(s),
    }
}

/// A trefoil test scene and the planar linking number of gamma with the knot.
pub struct TrefoilCase {
    pub label: String,
    pub scene: Scene,
    pub lk: i64,
}

/// Standard trefoil diagram with a Reidemeister-1 kink on arc 0, so that
/// the self-crossing count is even. Colors 1, 1, 2, 3.
fn trefoil_bases() -> Vec<(String, KnotPresentation)> {
    let mut out = Vec::new();
    for kink in [1i64, -1] {
        for (place, nums) in [
            ("kink-before", [0usize, 3, 1, 2]),
            ("kink-after", [0, 3, 0, 2]),
        ] {
            for t in [1i64, -1] {
                out.push((
                    format!("{place} kink{kink:+} trefoil{t:+}"),
                    knot(&[1, 1, 2, 3], &nums, "kkkk", &[kink, t, t, t]),
                ));
            }
        }
    }
    out
}

/// Splits arc `t` of `base` with a small gamma meridian passing under it.
/// The meridian sits at the start of the arc or at its end.
fn with_meridian(base: &KnotPresentation, t: usize, sg: i64, at_start: bool) -> Scene {
    let remap = |r: usize| {
        if r < t {
            r
        } else if r > t {
            r + 1
        } else if at_start {
            t + 1
        } else {
            t
        }
    };
    let mut k = KnotPresentation {
        colors: vec![],
        over_nums: vec![],
        over_kinds: vec![],
        signs: vec![],
    };
    for i in 0..base.len() {
        if i == t {
            k.colors.extend([base.colors[i], base.colors[i]]);
            k.over_nums.extend([0, remap(base.over_nums[i])]);
            k.over_kinds.extend([OverKind::Pseudo, base.over_kinds[i]]);
            k.signs
                .extend([CrossingSign::new(sg).unwrap(), base.signs[i]]);
        } else {
            k.colors.push(base.colors[i]);
            k.over_nums.push(remap(base.over_nums[i]));
            k.over_kinds.push(base.over_kinds[i]);
            k.signs.push(base.signs[i]);
        }
    }
    let under = if at_start { t + 1 } else { t };
    Scene {
        knot: k,
        gamma: curve(&[under], "k", &[sg]),
        delta: None,
    }
}

/// Meridians on every arc, loops around the braid axis, and loops passing
/// under a whole crossing.
pub fn trefoil_cases() -> Vec<TrefoilCase> {
    let mut out = Vec::new();
    for (name, base) in trefoil_bases() {
        for t in 0..4 {
            for sg in [1i64, -1] {
                for at_start in [true, false] {
                    out.push(TrefoilCase {
                        label: format!("{name} meridian arc {t} sign {sg:+} start={at_start}"),
                        scene: with_meridian(&base, t, sg, at_start),
                        lk: sg,
                    });
                }
            }
        }
        // a loop under all four strand ends at crossing i bounds a disk below
        // the diagram
        for i in 0..4 {
            let f = base.over_nums[i];
            let e = base.signs[i].value() as i64;
            out.push(TrefoilCase {
                label: format!("{name} loop under crossing {i}"),
                scene: Scene {
                    knot: base.clone(),
                    gamma: curve(&[f, (i + 1) % 4, f, i], "kkkk", &[e, 1, -e, -1]),
                    delta: None,
                },
                lk: 0,
            });
        }
    }
    for kink in [1i64, -1] {
        out.push(TrefoilCase {
            label: format!("braid axis kink{kink:+}"),
            scene: Scene {
                knot: knot(
                    &[1, 1, 1, 2, 3, 3],
                    &[0, 0, 5, 1, 0, 3],
                    "kpkkpk",
                    &[kink, 1, 1, 1, 1, 1],
                ),
                gamma: curve(&[2, 5], "kk", &[1, 1]),
                delta: None,
            },
            lk: 2,
        });
    }
    out
}

fn random_sign<R: Rng>(rng: &mut R) -> CrossingSign {
    if rng.gen_bool(0.5) {
        CrossingSign::Positive
    } else {
        CrossingSign::Negative
    }
}

fn random_curve<R: Rng>(
    rng: &mut R,
    len: usize,
    knot_len: usize,
    gamma_len: usize,
) -> CurvePresentation {
    let mut c = CurvePresentation {
        over_nums: vec![],
        over_kinds: vec![],
        signs: vec![],
    };
    for _ in 0..len {
        if rng.gen_bool(0.6) {
            c.over_kinds.push(OverKind::Knot);
            c.over_nums.push(rng.gen_range(0..knot_len));
        } else {
            c.over_kinds.push(OverKind::Pseudo);
            c.over_nums.push(rng.gen_range(0..gamma_len));
        }
        c.signs.push(random_sign(rng));
    }
    c
}

/// Attempts one random colored knot with auxiliary curves; `None` when the
/// draw does not produce a valid scene.
fn try_random_scene<R: Rng>(rng: &mut R) -> Option<Scene> {
    let m = rng.gen_range(4..=14);
    let s = rng.gen_range(1..=6);
    let kinds: Vec<OverKind> = (0..m)
        .map(|_| {
            if rng.gen_bool(0.65) {
                OverKind::Knot
            } else {
                OverKind::Pseudo
            }
        })
        .collect();
    let mut colors = vec![rng.gen_range(1..=3i64)];
    for i in 0..m - 1 {
        let next = match kinds[i] {
            OverKind::Pseudo => colors[i],
            OverKind::Knot => rng.gen_range(1..=3),
        };
        colors.push(next);
    }
    if kinds[m - 1] == OverKind::Pseudo && colors[m - 1] != colors[0] {
        return None;
    }
    let mut nums = Vec::with_capacity(m);
    for i in 0..m {
        match kinds[i] {
            OverKind::Pseudo => nums.push(rng.gen_range(0..s)),
            OverKind::Knot => {
                let (a, b) = (colors[i], colors[(i + 1) % m]);
                let want = if a == b { a } else { 6 - a - b };
                let choices: Vec<usize> = (0..m).filter(|&j| colors[j] == want).collect();
                if choices.is_empty() {
                    return None;
                }
                nums.push(choices[rng.gen_range(0..choices.len())]);
            }
        }
    }
    let knot = KnotPresentation {
        colors: colors.iter().map(|&c| Color::new(c).unwrap()).collect(),
        over_nums: nums,
        over_kinds: kinds,
        signs: (0..m).map(|_| random_sign(rng)).collect(),
    };
    let gamma = random_curve(rng, s, m, s);
    let t = rng.gen_range(1..=8);
    let delta = Some(random_curve(rng, t, m, s));
    let scene = Scene { knot, gamma, delta };
    validate_scene(&scene).is_valid().then_some(scene)
}

/// A random scene that passes validation. The encodings are combinatorially
/// consistent but need not come from a planar diagram.
pub fn random_scene<R: Rng>(rng: &mut R) -> Scene {
    loop {
        if let Some(s) = try_random_scene(rng) {
            return s;
        }
    }
}
