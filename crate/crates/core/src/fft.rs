//! Discrete Fourier transform of real sequences of any length.
//!
//! Power-of-two lengths use an iterative radix-2 transform. Other lengths go
//! through Bluestein's chirp-z algorithm on a power-of-two convolution of
//! size at least `2n - 1`.
//!
//! Twiddles at multiples of a quarter turn are exact (`1`, `-i`, `-1`, `i`),
//! so short transforms such as an impulse at `t = 1` come out with exactly
//! zero imaginary or real parts.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

pub use num_complex::Complex64;

/// Forward DFT `X_k = Σ x_t e^{-2πi kt/n}` of a real sequence.
///
/// The output is made exactly Hermitian: bin 0 (and bin n/2 for even n) is
/// purely real and `X_{n-k} = conj(X_k)`.
pub fn dft_real(input: &[f64]) -> Vec<Complex64> {
    let mut data: Vec<Complex64> = input.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    dft_in_place(&mut data);
    let n = data.len();
    if n == 0 {
        return data;
    }
    data[0] = Complex64::new(input.iter().sum(), 0.0);
    if n.is_multiple_of(2) {
        data[n / 2].im = 0.0;
    }
    for k in 1..n.div_ceil(2) {
        data[n - k] = data[k].conj();
    }
    data
}

pub fn dft_in_place(data: &mut [Complex64]) {
    let n = data.len();
    if n <= 1 {
        return;
    }
    if n.is_power_of_two() {
        radix2(data);
    } else {
        bluestein(data);
    }
}

/// `e^{-2πi k/n}` with exact values at quarter turns.
fn unit_root(k: usize, n: usize) -> Complex64 {
    let k = k % n;
    if (4 * k).is_multiple_of(n) {
        return match 4 * k / n {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, -1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, 1.0),
        };
    }
    let angle = -2.0 * PI * (k as f64) / (n as f64);
    Complex64::new(libm::cos(angle), libm::sin(angle))
}

fn radix2(data: &mut [Complex64]) {
    let n = data.len();
    let bits = n.trailing_zeros();
    for i in 0..n {
        let j = i.reverse_bits() >> (usize::BITS - bits);
        if j > i {
            data.swap(i, j);
        }
    }
    let twiddles: Vec<Complex64> = (0..n / 2).map(|k| unit_root(k, n)).collect();
    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let stride = n / len;
        for start in (0..n).step_by(len) {
            for k in 0..half {
                let w = twiddles[k * stride];
                let a = data[start + k];
                let b = data[start + k + half] * w;
                data[start + k] = a + b;
                data[start + k + half] = a - b;
            }
        }
        len <<= 1;
    }
}

fn inverse_radix2(data: &mut [Complex64]) {
    for v in data.iter_mut() {
        *v = v.conj();
    }
    radix2(data);
    let scale = 1.0 / data.len() as f64;
    for v in data.iter_mut() {
        *v = v.conj() * scale;
    }
}

fn bluestein(data: &mut [Complex64]) {
    let n = data.len();
    let m = (2 * n - 1).next_power_of_two();
    // chirp[j] = e^{-iπ j²/n}; j² is reduced mod 2n in integers first.
    let two_n = 2 * n as u128;
    let chirp: Vec<Complex64> = (0..n)
        .map(|j| {
            let j = j as u128;
            unit_root(((j * j) % two_n) as usize, 2 * n)
        })
        .collect();

    let mut a = vec![Complex64::new(0.0, 0.0); m];
    for (slot, (x, c)) in a.iter_mut().zip(data.iter().zip(&chirp)) {
        *slot = x * c;
    }
    let mut b = vec![Complex64::new(0.0, 0.0); m];
    b[0] = chirp[0].conj();
    for j in 1..n {
        let c = chirp[j].conj();
        b[j] = c;
        b[m - j] = c;
    }
    radix2(&mut a);
    radix2(&mut b);
    for (x, y) in a.iter_mut().zip(&b) {
        *x *= y;
    }
    inverse_radix2(&mut a);
    for (k, out) in data.iter_mut().enumerate() {
        *out = a[k] * chirp[k];
    }
}
