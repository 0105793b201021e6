use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use skeinlab::diagram::{bracket, delta, parse_diagram, parse_slice_word, reduce, BasisTangle, Sign, SkeinElement};
use skeinlab::oracle::{naive_reduce, random_stated_word};
use skeinlab::sl2::{self, Letter, Pbw};
use skeinlab::HalfLaurent;

fn q(e: i64) -> HalfLaurent {
    HalfLaurent::q_pow(e)
}

#[test]
fn hopf_link_bracket() {
    let w = parse_slice_word("tangle(0){cup0;cup1;x2;x2;cap1;cap0}").unwrap();
    let want = &delta() * &(-&(&q(4) + &q(-4)));
    assert_eq!(bracket(&w).unwrap(), want);
}

#[test]
fn trefoil_bracket() {
    let w = parse_slice_word("tangle(0){cup0;cup1;x2;x2;x2;cap1;cap0}").unwrap();
    let jones = &(&q(-7) - &q(-3)) - &q(5);
    assert_eq!(bracket(&w).unwrap(), &delta() * &jones);
}

#[test]
fn mirror_trefoil_bracket() {
    let w = parse_slice_word("tangle(0){cup0;cup1;xb2;xb2;xb2;cap1;cap0}").unwrap();
    let jones = &(&q(7) - &q(3)) - &q(-5);
    assert_eq!(bracket(&w).unwrap(), &delta() * &jones);
}

#[test]
fn unknot_with_kink() {
    let w = parse_slice_word("tangle(0){cup0;cup1;x2;cap1;cap0}").unwrap();
    assert_eq!(bracket(&w).unwrap(), &(-q(3)) * &delta());
}

#[test]
fn random_words_match_smoothing_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..500 {
        let d = random_stated_word(&mut rng, 3, 6);
        assert_eq!(reduce(&d), naive_reduce(&d), "diagram {d}");
    }
}

#[test]
fn boundary_arcs() {
    let arc = |src: &str| reduce(&parse_diagram(src).unwrap());
    let unit = |c: HalfLaurent| SkeinElement::single(BasisTangle::unit(), c);
    assert_eq!(arc("tangle(0){cup0} east=+-"), unit(HalfLaurent::s_pow(-1)));
    assert_eq!(arc("tangle(0){cup0} east=-+"), unit(-HalfLaurent::s_pow(-5)));
    assert_eq!(arc("tangle(0){cup0} east=++"), SkeinElement::zero());
    assert_eq!(arc("tangle(2){cap0} west=+-"), unit(-HalfLaurent::s_pow(5)));
    assert_eq!(arc("tangle(2){cap0} west=-+"), unit(HalfLaurent::s_pow(1)));
}

#[test]
fn pbw_normal_form() {
    use Letter::{A, B, C, D};
    let m = |a, b, c, d| sl2::HopfElement::basis(Pbw::new(a, b, c, d).unwrap());
    assert_eq!(sl2::normalize(&[B, A]), m(1, 1, 0, 0).scale(&q(2)));
    assert_eq!(sl2::normalize(&[C, D]), m(0, 0, 1, 1).scale(&q(-2)));
    assert_eq!(sl2::normalize(&[C, B]), m(0, 1, 1, 0));
    let ad = &m(0, 0, 0, 0) + &m(0, 1, 1, 0).scale(&q(-2));
    assert_eq!(sl2::normalize(&[A, D]), ad);
    let da = &m(0, 0, 0, 0) + &m(0, 1, 1, 0).scale(&q(2));
    assert_eq!(sl2::normalize(&[D, A]), da);
    assert!(Pbw::new(1, 0, 0, 1).is_none());
}

#[test]
fn words_and_skein_products_agree() {
    let letters = [Letter::A, Letter::B, Letter::C, Letter::D];
    for x in letters {
        for y in letters {
            for z in letters {
                let word = sl2::normalize(&[x, y, z]);
                let skein = [x, y, z].iter().fold(skeinlab::bigon::unit(), |acc, l| {
                    let (mu, nu) = l.states();
                    skeinlab::bigon::mul(&acc, &SkeinElement::basis(BasisTangle::new(vec![mu], vec![nu]).unwrap()))
                });
                assert_eq!(sl2::to_skein(&word), skein, "{}{}{}", x.as_char(), y.as_char(), z.as_char());
            }
        }
    }
}

#[test]
fn decreasing_states_are_fixed_by_reduction() {
    for b in BasisTangle::up_to(3) {
        assert_eq!(reduce(&b.to_stated()), SkeinElement::basis(b.clone()));
    }
    assert!(BasisTangle::new(vec![Sign::Minus, Sign::Plus], vec![Sign::Plus, Sign::Plus]).is_err());
}
