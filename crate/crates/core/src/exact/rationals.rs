use crate::exact::rat::Rat;
use num::BigUint;
use std::collections::VecDeque;

type Frac = (BigUint, BigUint);

/// Breadth-first walk of the Stern-Brocot tree of mediants: every rational in
/// the chosen range appears exactly once, already in lowest terms, in a fixed
/// order that makes enumeration-based commands reproducible.
pub struct SternBrocot {
    queue: VecDeque<(Frac, Frac)>,
}

impl SternBrocot {
    /// All positive rationals: `1, 1/2, 2, 1/3, 2/3, 3/2, 3, ...`
    pub fn positive() -> SternBrocot {
        SternBrocot::between((0u32, 1u32), (1u32, 0u32))
    }

    /// The rationals strictly between zero and one:
    /// `1/2, 1/3, 2/3, 1/4, 2/5, 3/5, 3/4, ...`
    pub fn unit_interval() -> SternBrocot {
        SternBrocot::between((0u32, 1u32), (1u32, 1u32))
    }

    fn between(lo: (u32, u32), hi: (u32, u32)) -> SternBrocot {
        let mut queue = VecDeque::new();
        queue.push_back((
            (BigUint::from(lo.0), BigUint::from(lo.1)),
            (BigUint::from(hi.0), BigUint::from(hi.1)),
        ));
        SternBrocot { queue }
    }
}

impl Iterator for SternBrocot {
    type Item = Rat;

    fn next(&mut self) -> Option<Rat> {
        let (lo, hi) = self.queue.pop_front()?;
        let mediant = (&lo.0 + &hi.0, &lo.1 + &hi.1);
        let item = Rat::new(mediant.0.clone(), mediant.1.clone());
        self.queue.push_back((lo, mediant.clone()));
        self.queue.push_back((mediant, hi));
        Some(item)
    }
}
