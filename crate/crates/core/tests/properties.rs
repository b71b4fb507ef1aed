mod common;

use common::{random_diagram_exact, rng};
use gaussforge::bracket::{four_jones, jones};
use gaussforge::khovanov::{build_complex, euler_characteristic, kh_four, unnormalized_jones_q};
use gaussforge::maps::{map_p_r, project, MapKind};
use gaussforge::moves::{apply_move, enumerate_all_moves, inverse_move, r3_case, Direction, MoveSpec};
use gaussforge::{parse_gauss_code, BasedGaussDiagram};
use proptest::prelude::*;

fn diagram(max_chords: usize) -> impl Strategy<Value = BasedGaussDiagram> {
    (any::<u64>(), 0..=max_chords).prop_map(|(seed, n)| random_diagram_exact(&mut rng(seed), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn serialize_parse_round_trip(d in diagram(7), closed in any::<bool>()) {
        let d = if closed { d.close().unwrap() } else { d };
        let text = d.serialize();
        prop_assert_eq!(parse_gauss_code(&text).unwrap(), d.clone());
        prop_assert_eq!(text.clone(), d.to_string());
        let unspaced = match text.strip_suffix(" @closed") {
            Some(body) => format!("{} @closed", body.replace(' ', "")),
            None => text.replace(' ', ""),
        };
        prop_assert_eq!(parse_gauss_code(&unspaced).unwrap(), d);
    }

    #[test]
    fn mirror_inverts_the_variable(d in diagram(5)) {
        let m = d.mirror();
        for k in [MapKind::Pr, MapKind::Pra] {
            let v = jones(&project(&d, k).unwrap()).unwrap();
            let w = jones(&project(&m, k).unwrap()).unwrap();
            prop_assert_eq!(w, v.invert_variable());
        }
        prop_assert_eq!(m.mirror(), d);
    }

    #[test]
    fn every_move_preserves_jones_and_is_invertible(d in diagram(4)) {
        let before = four_jones(&d).unwrap();
        for m in enumerate_all_moves(&d).into_iter().filter(|m| !matches!(m, MoveSpec::R2Insert { .. })).chain(
            enumerate_all_moves(&d).into_iter().filter(|m| matches!(m, MoveSpec::R2Insert { .. })).step_by(7),
        ) {
            let e = apply_move(&d, &m).unwrap();
            prop_assert_eq!(four_jones(&e).unwrap(), before.clone(), "{} after {}", e, m);
            let back = apply_move(&e, &inverse_move(&d, &m).unwrap()).unwrap();
            prop_assert_eq!(back, d.clone());
        }
    }

    #[test]
    fn r3_sites_follow_the_table(d in diagram(6)) {
        for m in enumerate_all_moves(&d) {
            if let MoveSpec::R3 { chords, case } = m {
                let cs: Vec<_> = chords.iter().map(|&id| *d.chord(id).unwrap()).collect();
                let signs = [cs[0].sign, cs[1].sign, cs[2].sign];
                let dirs = [0, 1, 2].map(|k| if cs[k].over_is_first() { Direction::Alpha } else { Direction::Beta });
                prop_assert_eq!(r3_case(signs, dirs), Some(case));
            }
        }
    }

    #[test]
    fn virtualization_keeps_the_real_projection(d in diagram(5)) {
        for c in d.chords() {
            let v = d.virtualize_chord(c.id).unwrap();
            prop_assert_eq!(map_p_r(&v), map_p_r(&d));
        }
    }

    #[test]
    fn khovanov_complex_is_consistent(d in diagram(5), k in 0usize..4) {
        let s = project(&d, MapKind::ALL[k]).unwrap().closure();
        let cx = build_complex(&s).unwrap();
        prop_assert!(cx.d_squared_is_zero());
        let v = jones(&s).unwrap();
        prop_assert_eq!(euler_characteristic(&cx.homology()), unnormalized_jones_q(&v).unwrap());
        prop_assert_eq!(cx.euler_characteristic(), unnormalized_jones_q(&v).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn single_moves_preserve_khovanov(d in diagram(3), pick in any::<prop::sample::Index>()) {
        let moves = enumerate_all_moves(&d);
        let m = moves[pick.index(moves.len())];
        let e = apply_move(&d, &m).unwrap();
        prop_assert_eq!(kh_four(&e).unwrap(), kh_four(&d).unwrap(), "{}", m);
    }
}
