use super::ShiftError;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// A bi-infinite sequence that is eventually periodic on both sides.
///
/// The transient occupies indices `start .. start + transient.len()`;
/// below that the left cycle tiles leftward (its last entry sits at
/// `start - 1`), above it the right cycle tiles rightward.  Two rays
/// are compared as points, i.e. coordinate-wise, via [`Ray::eq_point`];
/// derived `PartialEq` compares representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ray<T> {
    left_cycle: Vec<T>,
    transient: Vec<T>,
    right_cycle: Vec<T>,
    start: i64,
}

impl<T: Copy + Eq> Ray<T> {
    pub fn new(
        left_cycle: Vec<T>,
        transient: Vec<T>,
        right_cycle: Vec<T>,
        start: i64,
    ) -> Result<Ray<T>, ShiftError> {
        if left_cycle.is_empty() || right_cycle.is_empty() {
            return Err(ShiftError::EmptyCycle);
        }
        Ok(Ray {
            left_cycle,
            transient,
            right_cycle,
            start,
        })
    }

    /// The periodic point `cycle^infinity` with `cycle[0]` at index 0.
    pub fn periodic(cycle: Vec<T>) -> Result<Ray<T>, ShiftError> {
        Ray::new(cycle.clone(), Vec::new(), cycle, 0)
    }

    pub fn left_cycle(&self) -> &[T] {
        &self.left_cycle
    }

    pub fn transient(&self) -> &[T] {
        &self.transient
    }

    pub fn right_cycle(&self) -> &[T] {
        &self.right_cycle
    }

    /// First index of the transient region.
    pub fn start(&self) -> i64 {
        self.start
    }

    /// First index of the right-cycle region.
    pub fn end(&self) -> i64 {
        self.start + self.transient.len() as i64
    }

    /// Coordinate at index `i`.
    pub fn at(&self, i: i64) -> T {
        if i >= self.end() {
            let off = (i - self.end()) as usize % self.right_cycle.len();
            self.right_cycle[off]
        } else if i >= self.start {
            self.transient[(i - self.start) as usize]
        } else {
            let l = self.left_cycle.len() as i64;
            let off = (((i - self.start) % l) + l) % l;
            self.left_cycle[off as usize]
        }
    }

    /// The shifted point: `shifted(k)` has coordinate `i` equal to the
    /// original coordinate `i + k`.
    pub fn shifted(&self, k: i64) -> Ray<T> {
        let mut out = self.clone();
        out.start -= k;
        out
    }

    /// Coordinates `lo ..= hi`.
    pub fn window(&self, lo: i64, hi: i64) -> Vec<T> {
        (lo..=hi).map(|i| self.at(i)).collect()
    }

    pub fn map<U: Copy + Eq>(&self, f: impl Fn(T) -> U) -> Ray<U> {
        Ray {
            left_cycle: self.left_cycle.iter().map(|&t| f(t)).collect(),
            transient: self.transient.iter().map(|&t| f(t)).collect(),
            right_cycle: self.right_cycle.iter().map(|&t| f(t)).collect(),
            start: self.start,
        }
    }

    /// Coordinate-wise equality.  It suffices to compare a window that
    /// covers both transients plus a full common period on each side.
    pub fn eq_point(&self, other: &Ray<T>) -> bool {
        let left = lcm(self.left_cycle.len(), other.left_cycle.len()) as i64;
        let right = lcm(self.right_cycle.len(), other.right_cycle.len()) as i64;
        let lo = self.start.min(other.start) - 2 * left;
        let hi = self.end().max(other.end()) + 2 * right;
        (lo..=hi).all(|i| self.at(i) == other.at(i))
    }

    /// Least period when the point is shift-periodic.  Any period of an
    /// eventually periodic point divides its right-cycle length, so
    /// only divisors of that length need checking.
    pub fn least_period(&self) -> Option<usize> {
        let r = self.right_cycle.len();
        (1..=r)
            .filter(|d| r % d == 0)
            .find(|&d| self.eq_point(&self.shifted(d as i64)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_covers_all_regions() {
        // ...(1 2)(1 2) 9 8 (3)(3)... with the transient at 0..2
        let r = Ray::new(vec![1, 2], vec![9, 8], vec![3], 0).unwrap();
        assert_eq!(r.at(0), 9);
        assert_eq!(r.at(1), 8);
        assert_eq!(r.at(2), 3);
        assert_eq!(r.at(77), 3);
        assert_eq!(r.at(-1), 2);
        assert_eq!(r.at(-2), 1);
        assert_eq!(r.at(-3), 2);
        assert_eq!(r.window(-2, 2), vec![1, 2, 9, 8, 3]);
    }

    #[test]
    fn shift_moves_coordinates() {
        let r = Ray::new(vec![1, 2], vec![9], vec![3, 4], 0).unwrap();
        let s = r.shifted(3);
        for i in -8..8 {
            assert_eq!(s.at(i), r.at(i + 3));
        }
    }

    #[test]
    fn point_equality_ignores_representation() {
        // (0 1)^inf written with different anchors and doubled cycles.
        let a = Ray::periodic(vec![0, 1]).unwrap();
        let b = Ray::new(vec![0, 1, 0, 1], vec![0, 1], vec![0, 1], -6).unwrap();
        assert!(a.eq_point(&b));
        assert!(!a.eq_point(&a.shifted(1)));
        assert!(a.eq_point(&a.shifted(2)));
    }

    #[test]
    fn least_period_reduces_doubled_cycles() {
        let a = Ray::periodic(vec![0, 1, 0, 1]).unwrap();
        assert_eq!(a.least_period(), Some(2));
        let b = Ray::new(vec![0], vec![1], vec![0], 0).unwrap();
        assert_eq!(b.least_period(), None);
        let fixed = Ray::periodic(vec![7]).unwrap();
        assert_eq!(fixed.least_period(), Some(1));
    }
}
