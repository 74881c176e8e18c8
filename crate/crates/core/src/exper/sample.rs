use rand::Rng;

use crate::combinat::SchubertProblemSpec;
use crate::error::Result;
use crate::exactalg::{rat, Rational};
use crate::schubert::{OsculatingInstance, OsculationPoint, OsculationType};

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of one sample: a pure function of the master seed, the targeted
/// osculation type, the record index and the resampling attempt, so that
/// results do not depend on scheduling.
pub fn derive_seed(master: u64, osc_type: &OsculationType, index: usize, attempt: usize) -> u64 {
    let mut s = splitmix64(master);
    for &r in osc_type.counts() {
        s = splitmix64(s ^ (r as u64 + 1));
    }
    s = splitmix64(s ^ 0xA5A5_0000 ^ index as u64);
    splitmix64(s ^ (attempt as u64).rotate_left(32))
}

/// Collisions tolerated before the sampling box is doubled.
const COLLISIONS_PER_WIDENING: usize = 64;

struct PointDraw<'a, R: Rng> {
    rng: &'a mut R,
    range: i64,
    used: Vec<OsculationPoint>,
    misses: usize,
}

impl<R: Rng> PointDraw<'_, R> {
    /// An integer or half-integer in `[-R, R]`.
    fn coordinate(&mut self) -> Rational {
        let den = if self.rng.gen_bool(0.75) { 1 } else { 2 };
        rat(self.rng.gen_range(-self.range * den..=self.range * den), den)
    }

    fn miss(&mut self) {
        self.misses += 1;
        if self.misses.is_multiple_of(COLLISIONS_PER_WIDENING) {
            self.range = self.range.saturating_mul(2);
        }
    }

    fn real(&mut self) -> OsculationPoint {
        loop {
            let p = OsculationPoint::real(self.coordinate());
            if !self.used.contains(&p) {
                self.used.push(p.clone());
                return p;
            }
            self.miss();
        }
    }

    fn pair(&mut self) -> (OsculationPoint, OsculationPoint) {
        loop {
            let re = self.coordinate();
            let den = if self.rng.gen_bool(0.75) { 1 } else { 2 };
            let im = rat(self.rng.gen_range(1..=self.range * den), den);
            let p = OsculationPoint::complex(re, im);
            let q = p.conj();
            if !self.used.contains(&p) && !self.used.contains(&q) {
                self.used.push(p.clone());
                self.used.push(q.clone());
                return (p, q);
            }
            self.miss();
        }
    }
}

/// A real instance of the given osculation type. For each condition, in
/// the problem's order (largest first), its real points come first and then
/// its conjugate pairs `p +- q i`. The first two real points are `inf` and
/// `0`, so the largest real conditions land on the chart anchors.
pub fn sample_instance<R: Rng>(
    problem: &SchubertProblemSpec,
    osc_type: &OsculationType,
    rng: &mut R,
    range: i64,
) -> Result<OsculatingInstance> {
    osc_type.validate(problem)?;
    let mut draw = PointDraw { rng, range: range.max(2), used: Vec::new(), misses: 0 };
    let mut anchors = vec![OsculationPoint::zero(), OsculationPoint::Infinity];
    let mut points = Vec::with_capacity(problem.expanded().len());
    for ((_, m), &r) in problem.conditions().iter().zip(osc_type.counts()) {
        for _ in 0..r {
            match anchors.pop() {
                Some(a) => {
                    draw.used.push(a.clone());
                    points.push(a);
                }
                None => points.push(draw.real()),
            }
        }
        for _ in 0..(*m as usize - r) / 2 {
            let (p, q) = draw.pair();
            points.push(p);
            points.push(q);
        }
    }
    OsculatingInstance::new(problem.clone(), points)
}
