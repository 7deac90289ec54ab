use std::f64::consts::PI;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
const SHIFT: f64 = 15.0;

// B_{2m} / (2m (2m-1)) for m = 1..8
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

fn stirling(x: f64) -> f64 {
    let r = 1.0 / (x * x);
    let mut corr = 0.0;
    let mut p = 1.0 / x;
    for c in STIRLING {
        corr += c * p;
        p *= r;
    }
    (x - 0.5) * x.ln() - x + LN_SQRT_2PI + corr
}

/// sin(pi x) with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let s = (PI * (x - n)).sin();
    if n.rem_euclid(2.0) == 1.0 {
        -s
    } else {
        s
    }
}

// Lanczos (g = 7, n = 9) coefficients.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

// Γ(r) for r in [1, 2).
fn lanczos(r: f64) -> f64 {
    let z = r - 1.0;
    let mut a = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * a
}

// Γ(x) for 0.5 <= x < SHIFT by recurrence from [1, 2).
fn gamma_mid(x: f64) -> f64 {
    if x == x.floor() {
        let mut f = 1.0;
        let mut k = 2.0;
        while k < x {
            f *= k;
            k += 1.0;
        }
        return f;
    }
    if x < 1.0 {
        return lanczos(x + 1.0) / x;
    }
    let mut r = x - x.floor() + 1.0;
    let mut g = lanczos(r);
    while r + 0.5 < x {
        g *= r;
        r += 1.0;
    }
    g
}

fn ln_gamma_pos(x: f64) -> f64 {
    if x >= SHIFT {
        stirling(x)
    } else {
        gamma_mid(x).ln()
    }
}

/// Returns `(ln|Γ(x)|, sign Γ(x))`. At the poles the sign is 0 and the
/// magnitude is infinite.
pub fn ln_gamma(x: f64) -> (f64, f64) {
    if x.is_nan() {
        return (f64::NAN, f64::NAN);
    }
    if x <= 0.0 && x == x.floor() {
        return (f64::INFINITY, 0.0);
    }
    if x >= 0.5 {
        return (ln_gamma_pos(x), 1.0);
    }
    // Γ(x) Γ(1-x) = π / sin(πx)
    let s = sin_pi(x);
    let lg = PI.ln() - s.abs().ln() - ln_gamma_pos(1.0 - x);
    (lg, s.signum())
}

/// Γ(x). Overflows to ±inf above x ≈ 171.6.
pub fn gamma(x: f64) -> f64 {
    if (0.5..SHIFT).contains(&x) || (x == x.floor() && (1.0..=171.0).contains(&x)) {
        return gamma_mid(x);
    }
    if x < 0.5 && x != x.floor() {
        return PI / (sin_pi(x) * gamma(1.0 - x));
    }
    let (lg, s) = ln_gamma(x);
    if s == 0.0 {
        return f64::NAN;
    }
    s * lg.exp()
}

/// 1/Γ(x), zero at the poles of Γ.
pub fn rgamma(x: f64) -> f64 {
    if x > -SHIFT && x < SHIFT {
        if x <= 0.0 && x == x.floor() {
            return 0.0;
        }
        return 1.0 / gamma(x);
    }
    let (lg, s) = ln_gamma(x);
    if s == 0.0 {
        return 0.0;
    }
    s * (-lg).exp()
}
