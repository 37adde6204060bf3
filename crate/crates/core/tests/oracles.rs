//! Enumeration counts checked against naive box searches that share no code
//! with the library, plus values frozen from those searches.

use quaternary_forms::classify::{first_gap, Form};
use quaternary_forms::qseries::{hex_theta_series, phi_series, psi_series};
use quaternary_forms::repcount::{
    count_hex, count_quaternary, count_ternary_mixed, m_mixed, r2, r3, t2, QuaternaryForm,
    TernaryMixedForm,
};

mod brute {
    //! Plain nested loops over a box wide enough for every `n` used below.

    const R: i64 = 12;

    fn tri(x: i64) -> i64 {
        x * (x + 1) / 2
    }

    pub fn hex(n: i64) -> u64 {
        let mut c = 0;
        for z in -R..=R {
            for w in -R..=R {
                c += (z * z + z * w + w * w == n) as u64;
            }
        }
        c
    }

    pub fn quaternary(a: i64, b: i64, c: i64, n: i64) -> u64 {
        let mut count = 0;
        for x in -R..=R {
            for y in -R..=R {
                let rest = n - a * x * x - b * y * y;
                if rest < 0 || rest % c != 0 {
                    continue;
                }
                count += hex(rest / c);
            }
        }
        count
    }

    pub fn ternary_mixed(a: i64, c: i64, n: i64) -> u64 {
        let mut count = 0;
        for x in -R..=R {
            for y in -R..=R {
                for z in -R..=R {
                    count += (a * x * x + c * (y * y + y * z + z * z) == n) as u64;
                }
            }
        }
        count
    }

    pub fn r2(a: i64, b: i64, n: i64) -> u64 {
        let mut c = 0;
        for x in -R..=R {
            for y in -R..=R {
                c += (a * x * x + b * y * y == n) as u64;
            }
        }
        c
    }

    pub fn r3(a: i64, b: i64, g: i64, n: i64) -> u64 {
        let mut c = 0;
        for x in -R..=R {
            for y in -R..=R {
                for z in -R..=R {
                    c += (a * x * x + b * y * y + g * z * z == n) as u64;
                }
            }
        }
        c
    }

    pub fn t2(a: i64, b: i64, n: i64) -> u64 {
        let mut c = 0;
        for x in 0..=R {
            for y in 0..=R {
                c += (a * tri(x) + b * tri(y) == n) as u64;
            }
        }
        c
    }

    pub fn m_mixed(a: i64, b: i64, g: i64, n: i64) -> u64 {
        let mut c = 0;
        for x in -R..=R {
            for y in 0..=R {
                for z in 0..=R {
                    c += (a * x * x + b * tri(y) + g * tri(z) == n) as u64;
                }
            }
        }
        c
    }
}

#[test]
fn hex_matches_box_search() {
    for n in 0..=100u64 {
        assert_eq!(count_hex(n), brute::hex(n as i64), "n={n}");
    }
}

#[test]
fn ternary_and_quaternary_match_box_search() {
    for (a, c) in [(1, 1), (2, 1), (1, 2), (1, 3), (1, 4), (3, 5)] {
        let f = TernaryMixedForm::new(a, c).unwrap();
        for n in 0..=60u64 {
            assert_eq!(
                count_ternary_mixed(f, n),
                brute::ternary_mixed(a as i64, c as i64, n as i64),
                "A^{a}_{c}({n})"
            );
        }
    }
    for (a, b, c) in [(1, 1, 1), (1, 2, 1), (2, 5, 1), (1, 2, 3), (1, 2, 4), (3, 7, 2)] {
        let f = QuaternaryForm::new(a, b, c).unwrap();
        for n in 0..=60u64 {
            assert_eq!(
                count_quaternary(f, n),
                brute::quaternary(a as i64, b as i64, c as i64, n as i64),
                "{f} at {n}"
            );
        }
    }
}

#[test]
fn two_and_three_variable_counts_match_box_search() {
    for n in 0..=60u64 {
        let ni = n as i64;
        for (a, b) in [(1, 1), (1, 2), (1, 3), (2, 3), (2, 6)] {
            assert_eq!(r2(a, b, n), brute::r2(a as i64, b as i64, ni));
            assert_eq!(t2(a, b, n), brute::t2(a as i64, b as i64, ni));
        }
        for (a, b, g) in [(1, 1, 3), (1, 2, 3), (1, 3, 9), (1, 4, 12)] {
            assert_eq!(r3(a, b, g, n), brute::r3(a as i64, b as i64, g as i64, ni));
        }
        for (a, b, g) in [(1, 2, 6), (1, 1, 3), (1, 6, 18), (1, 8, 24)] {
            assert_eq!(
                m_mixed(a, b, g, n),
                brute::m_mixed(a as i64, b as i64, g as i64, ni)
            );
        }
    }
}

#[test]
fn frozen_values() {
    // frozen from the box searches above
    assert_eq!(count_quaternary(QuaternaryForm::new(1, 2, 1).unwrap(), 7), 72);
    assert_eq!(count_quaternary(QuaternaryForm::new(1, 2, 4).unwrap(), 10), 24);
    assert_eq!(count_quaternary(QuaternaryForm::new(1, 1, 1).unwrap(), 1), 10);
    assert_eq!(count_ternary_mixed(TernaryMixedForm::new(1, 1).unwrap(), 2), 12);
    assert_eq!(t2(2, 6, 8), 1);
    let m126: Vec<u64> = (0..12).map(|n| m_mixed(1, 2, 6, n)).collect();
    assert_eq!(m126, vec![1, 2, 1, 2, 2, 0, 4, 4, 1, 4, 4, 2]);
    assert_eq!(
        first_gap(Form::Quaternary(QuaternaryForm::new(1, 7, 1).unwrap()), 2000),
        Some(6)
    );
}

#[test]
fn series_against_counts() {
    const N: usize = 400;
    let hex = hex_theta_series(N);
    let phi = phi_series(N);
    let psi = psi_series(N);
    for n in 0..=N {
        let nu = n as u64;
        assert_eq!(hex.coeff(n), count_hex(nu) as i64);
        let squares = (-25i64..=25).filter(|x| x * x == n as i64).count() as i64;
        assert_eq!(phi.coeff(n), squares);
        let triangles = (0i64..=30).filter(|x| x * (x + 1) / 2 == n as i64).count() as i64;
        assert_eq!(psi.coeff(n), triangles);
    }
    // psi(q^2) psi(q^6) at index 8 is t_{2,6}(8)
    let pp = psi.substitute_power(2).mul(&psi.substitute_power(6)).unwrap();
    assert_eq!(pp.coeff(8), t2(2, 6, 8) as i64);
    for n in 0..=N {
        assert_eq!(pp.coeff(n), t2(2, 6, n as u64) as i64);
    }
    // 6 q psi(q^2) psi(q^6) at index 1
    assert_eq!(pp.shift(1).scale(6).coeff(1), 6);
    assert_eq!(pp.shift(1).coeff(1), 1);
    // phi(q) psi(q^2) psi(q^6) = sum m_{1-2,6}(n) q^n
    let mixed = phi.mul(&pp).unwrap();
    for n in 0..=N {
        assert_eq!(mixed.coeff(n), m_mixed(1, 2, 6, n as u64) as i64);
    }
    let phiphi3 = phi.mul(&phi.substitute_power(3)).unwrap();
    for n in 0..=N {
        assert_eq!(phiphi3.coeff(n), r2(1, 3, n as u64) as i64);
    }
}
