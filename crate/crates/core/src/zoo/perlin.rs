//! 2D improved Perlin gradient noise with a seeded permutation table and a
//! fractional Brownian sum over octaves.

use crate::rng::SplitMix;

const GRADS: [(f64, f64); 8] = [
    (1.0, 0.0),
    (-1.0, 0.0),
    (0.0, 1.0),
    (0.0, -1.0),
    (1.0, 1.0),
    (-1.0, 1.0),
    (1.0, -1.0),
    (-1.0, -1.0),
];

#[derive(Debug, Clone)]
pub struct Perlin2 {
    perm: [u8; 512],
}

impl Perlin2 {
    pub fn new(seed: u64) -> Self {
        let mut table: Vec<u8> = (0..=255).collect();
        SplitMix::new(seed).shuffle(&mut table);
        let mut perm = [0u8; 512];
        for i in 0..512 {
            perm[i] = table[i & 255];
        }
        Perlin2 { perm }
    }

    #[inline]
    fn fade(t: f64) -> f64 {
        t * t * t * (t * (t * 6.0 - 15.0) + 10.0)
    }

    #[inline]
    fn grad(&self, xi: usize, yi: usize, dx: f64, dy: f64) -> f64 {
        let h = self.perm[(self.perm[xi & 255] as usize + yi) & 255] as usize;
        let (gx, gy) = GRADS[h & 7];
        gx * dx + gy * dy
    }

    /// Single-octave noise; roughly in [-1, 1], zero at integer lattice points.
    pub fn noise(&self, x: f64, y: f64) -> f64 {
        let x0 = x.floor();
        let y0 = y.floor();
        let dx = x - x0;
        let dy = y - y0;
        let xi = x0 as i64 as usize;
        let yi = y0 as i64 as usize;

        let n00 = self.grad(xi, yi, dx, dy);
        let n10 = self.grad(xi + 1, yi, dx - 1.0, dy);
        let n01 = self.grad(xi, yi + 1, dx, dy - 1.0);
        let n11 = self.grad(xi + 1, yi + 1, dx - 1.0, dy - 1.0);

        let u = Self::fade(dx);
        let v = Self::fade(dy);
        let nx0 = n00 + u * (n10 - n00);
        let nx1 = n01 + u * (n11 - n01);
        nx0 + v * (nx1 - nx0)
    }

    /// Fractional Brownian sum: frequency doubles and amplitude halves per
    /// octave.
    pub fn fbm(&self, x: f64, y: f64, octaves: u32) -> f64 {
        let mut total = 0.0;
        let mut amp = 1.0;
        let mut freq = 1.0;
        for _ in 0..octaves {
            total += amp * self.noise(x * freq, y * freq);
            amp *= 0.5;
            freq *= 2.0;
        }
        total
    }
}
