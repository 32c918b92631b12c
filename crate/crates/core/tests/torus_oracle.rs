mod common;

use common::{torus, torus_word};
use dehn_core::pi1::{FreeWord, Pi1Engine};
use dehn_core::Config;

fn engine_images(engine: &Pi1Engine, w: &str) -> (String, String) {
    let imgs = engine.images(&torus_word(w)).unwrap();
    let show = |f: &FreeWord| {
        f.letters()
            .iter()
            .map(|&l| match l {
                1 => 'x',
                -1 => 'X',
                2 => 'y',
                -2 => 'Y',
                _ => unreachable!(),
            })
            .collect::<String>()
    };
    (show(&imgs[0]), show(&imgs[1]))
}

#[test]
fn oracle_satisfies_torus_relations() {
    let id = torus::Auto::identity();
    assert_eq!(torus::word("aA"), id);
    assert_eq!(torus::word("aba"), torus::word("bab"));
    // (ab)^6 is the boundary twist: conjugation by [x, y]
    let d = torus::word("abababababab");
    assert_eq!(d.x, "xyXYxyxYX");
    assert_eq!(d.y, "xyXyxYX");
}

#[test]
fn engine_images_match_oracle_on_short_words() {
    let engine = Pi1Engine::new(1, Config::sequential());
    for w in torus::all_words(4) {
        let o = torus::word(&w);
        assert_eq!(
            engine_images(&engine, &w),
            (o.x.clone(), o.y.clone()),
            "word {w}"
        );
    }
}

#[test]
fn equality_relation_matches_oracle() {
    let engine = Pi1Engine::new(1, Config::sequential());
    let words = torus::all_words(4);
    let oracle: Vec<_> = words.iter().map(|w| torus::word(w)).collect();
    let twist: Vec<_> = words.iter().map(|w| torus_word(w)).collect();
    let mut equal_pairs = 0;
    for i in 0..words.len() {
        for j in 0..words.len() {
            let e = engine.equal_rel_boundary(&twist[i], &twist[j]).unwrap();
            assert_eq!(e, oracle[i] == oracle[j], "{} vs {}", words[i], words[j]);
            equal_pairs += e as usize;
        }
    }
    assert!(equal_pairs > words.len());
}
