//! Signed permutations with an even number of sign flips, surface
//! monodromy data built from them, orbit and ramification bookkeeping for
//! the induced action on the rank-2^n fiber, and a seeded sampler for
//! simple two-component instances.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::hamming::BitVector;
use crate::{Error, Result};

/// Orbit enumeration walks all 2^n fiber states; refuse beyond this.
pub const MAX_ORBIT_LEN: u32 = 20;

const SAMPLER_ATTEMPTS: u32 = 200;

/// A permutation of n strands together with one sign flip per strand, the
/// total number of flips being even. Acting on a bit vector x produces y
/// with y[perm[i]] = x[i] xor sign[i].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedPerm {
    perm: Vec<u32>,
    signs: u32,
}

impl SignedPerm {
    /// Builds an element from a 0-based image array and a 0/1 flip per
    /// strand; the flip count must be even.
    pub fn new(perm: Vec<u32>, signs: &[u8]) -> Result<Self> {
        let n = perm.len();
        if n > 32 {
            return Err(Error::InvalidArgument(format!(
                "strand count {n} exceeds 32"
            )));
        }
        if signs.len() != n {
            return Err(Error::InvalidArgument(format!(
                "permutation acts on {n} strands but {} signs were given",
                signs.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p as usize >= n || seen[p as usize] {
                return Err(Error::InvalidArgument(
                    "image array is not a permutation".into(),
                ));
            }
            seen[p as usize] = true;
        }
        let mut word = 0u32;
        for (i, &s) in signs.iter().enumerate() {
            if s > 1 {
                return Err(Error::InvalidArgument("signs must be 0 or 1".into()));
            }
            word |= (s as u32) << i;
        }
        if word.count_ones() % 2 != 0 {
            return Err(Error::InvalidArgument(
                "sign flips must come in pairs (even total weight)".into(),
            ));
        }
        Ok(SignedPerm { perm, signs: word })
    }

    /// Builds an element from the serialized form: 1-based image array.
    pub fn from_one_based(perm: &[u32], signs: &[u8]) -> Result<Self> {
        let shifted: Vec<u32> = perm
            .iter()
            .map(|&p| {
                if p == 0 {
                    Err(Error::InvalidArgument(
                        "serialized image arrays are 1-based".into(),
                    ))
                } else {
                    Ok(p - 1)
                }
            })
            .collect::<Result<_>>()?;
        Self::new(shifted, signs)
    }

    /// Serialized form: 1-based image array and 0/1 signs.
    pub fn to_one_based(&self) -> (Vec<u32>, Vec<u8>) {
        let perm = self.perm.iter().map(|&p| p + 1).collect();
        let signs = (0..self.n()).map(|i| ((self.signs >> i) & 1) as u8).collect();
        (perm, signs)
    }

    pub fn identity(n: u32) -> Result<Self> {
        Self::new((0..n).collect(), &vec![0u8; n as usize])
    }

    /// The strand transposition (i j), either with no flips or with flips
    /// on exactly i and j. Both variants are involutions.
    pub fn reflection(n: u32, i: u32, j: u32, flipped: bool) -> Result<Self> {
        if i >= n || j >= n || i == j {
            return Err(Error::InvalidArgument(format!(
                "transposition needs two distinct strands below {n}, got {i} and {j}"
            )));
        }
        let mut perm: Vec<u32> = (0..n).collect();
        perm.swap(i as usize, j as usize);
        let mut signs = vec![0u8; n as usize];
        if flipped {
            signs[i as usize] = 1;
            signs[j as usize] = 1;
        }
        Self::new(perm, &signs)
    }

    pub fn n(&self) -> u32 {
        self.perm.len() as u32
    }

    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    pub fn sign(&self, i: u32) -> bool {
        (self.signs >> i) & 1 == 1
    }

    pub fn act(&self, x: &BitVector) -> Result<BitVector> {
        if x.len() != self.n() {
            return Err(Error::InvalidArgument(format!(
                "vector length {} does not match strand count {}",
                x.len(),
                self.n()
            )));
        }
        BitVector::new(self.n(), self.act_word(x.word()))
    }

    /// The action on a packed bit word.
    pub fn act_word(&self, x: u32) -> u32 {
        let mut y = 0u32;
        for (i, &p) in self.perm.iter().enumerate() {
            let bit = ((x >> i) & 1) ^ ((self.signs >> i) & 1);
            y |= bit << p;
        }
        y
    }

    /// Group product self * other, where other acts first:
    /// act(self * other, x) = act(self, act(other, x)).
    pub fn compose(&self, other: &SignedPerm) -> Result<SignedPerm> {
        if self.n() != other.n() {
            return Err(Error::InvalidArgument("strand count mismatch".into()));
        }
        let n = self.perm.len();
        let mut perm = Vec::with_capacity(n);
        let mut signs = 0u32;
        for i in 0..n {
            let t = other.perm[i] as usize;
            perm.push(self.perm[t]);
            let bit = ((other.signs >> i) & 1) ^ ((self.signs >> t) & 1);
            signs |= bit << i;
        }
        Ok(SignedPerm { perm, signs })
    }

    pub fn inverse(&self) -> SignedPerm {
        let n = self.perm.len();
        let mut perm = vec![0u32; n];
        let mut signs = 0u32;
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p as usize] = i as u32;
            signs |= ((self.signs >> i) & 1) << p;
        }
        SignedPerm { perm, signs }
    }

    pub fn is_identity(&self) -> bool {
        self.signs == 0 && self.perm.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    /// True for a strand transposition whose flips are either absent or
    /// sit exactly on the two swapped strands.
    pub fn is_reflection(&self) -> bool {
        let mut moved = Vec::new();
        for (i, &p) in self.perm.iter().enumerate() {
            if i as u32 != p {
                moved.push(i as u32);
            }
        }
        if moved.len() != 2 {
            return false;
        }
        let (i, j) = (moved[0], moved[1]);
        if self.perm[i as usize] != j || self.perm[j as usize] != i {
            return false;
        }
        self.signs == 0 || self.signs == (1 << i) | (1 << j)
    }
}

/// Monodromy of a branched cover of a genus-g surface: one signed
/// permutation per handle generator (alternating pairs) and one per branch
/// point, subject to the surface relation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonodromyData {
    pub n: u32,
    pub genus_y: u32,
    /// Flat list a1, b1, a2, b2, ... of length 2 * genus_y.
    pub handles: Vec<SignedPerm>,
    pub branches: Vec<SignedPerm>,
}

impl MonodromyData {
    fn elements(&self) -> impl Iterator<Item = &SignedPerm> {
        self.handles.iter().chain(self.branches.iter())
    }

    /// Checks shape, that every branch element is a strand transposition
    /// with paired flips, and that the product of handle commutators and
    /// branch elements (rightmost acting first) is the identity.
    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidMonodromy(
                "at least two strands are required".into(),
            ));
        }
        if self.handles.len() != 2 * self.genus_y as usize {
            return Err(Error::InvalidMonodromy(format!(
                "base genus {} needs {} handle elements, got {}",
                self.genus_y,
                2 * self.genus_y,
                self.handles.len()
            )));
        }
        if self.branches.len() % 2 != 0 {
            return Err(Error::InvalidMonodromy(
                "branch count must be even: each branch element is an odd permutation".into(),
            ));
        }
        for g in self.elements() {
            if g.n() != self.n {
                return Err(Error::InvalidMonodromy(
                    "every element must act on the same strand count".into(),
                ));
            }
        }
        for b in &self.branches {
            if !b.is_reflection() {
                return Err(Error::InvalidMonodromy(
                    "every branch element must be a strand transposition with paired flips".into(),
                ));
            }
        }
        let mut acc = SignedPerm::identity(self.n)?;
        for pair in self.handles.chunks(2) {
            let (a, b) = (&pair[0], &pair[1]);
            acc = acc
                .compose(a)?
                .compose(b)?
                .compose(&a.inverse())?
                .compose(&b.inverse())?;
        }
        for t in &self.branches {
            acc = acc.compose(t)?;
        }
        if !acc.is_identity() {
            return Err(Error::InvalidMonodromy(
                "surface relation does not close up".into(),
            ));
        }
        Ok(())
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        UnionFind {
            parent: (0..size as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = self.parent[x as usize];
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra.max(rb) as usize] = ra.min(rb);
        }
    }
}

/// Orbit counts of the generated group on the n strands and on the 2^n
/// fiber states, the latter split by weight parity (which every element
/// preserves).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ComponentCounts {
    pub orbits_on_strands: usize,
    pub orbits_on_liftings: usize,
    pub orbits_even: usize,
    pub orbits_odd: usize,
}

fn check_orbit_cap(n: u32) -> Result<()> {
    if n > MAX_ORBIT_LEN {
        return Err(Error::InvalidArgument(format!(
            "fiber orbit enumeration walks 2^n states and is capped at n <= {MAX_ORBIT_LEN}, got {n}"
        )));
    }
    Ok(())
}

pub fn component_counts(data: &MonodromyData) -> Result<ComponentCounts> {
    data.validate()?;
    check_orbit_cap(data.n)?;
    let n = data.n;

    let mut strands = UnionFind::new(n as usize);
    for g in data.elements() {
        for i in 0..n {
            strands.union(i, g.perm()[i as usize]);
        }
    }
    let orbits_on_strands = (0..n).filter(|&i| strands.find(i) == i).count();

    let size = 1u32 << n;
    let mut fiber = UnionFind::new(size as usize);
    for g in data.elements() {
        for x in 0..size {
            fiber.union(x, g.act_word(x));
        }
    }
    let mut orbits_even = 0;
    let mut orbits_odd = 0;
    for x in 0..size {
        if fiber.find(x) == x {
            if x.count_ones() % 2 == 0 {
                orbits_even += 1;
            } else {
                orbits_odd += 1;
            }
        }
    }
    Ok(ComponentCounts {
        orbits_on_strands,
        orbits_on_liftings: orbits_even + orbits_odd,
        orbits_even,
        orbits_odd,
    })
}

/// Ramification and genus bookkeeping: the downstairs cover genus from
/// degree-n Riemann-Hurwitz (each branch element contributes one strand
/// two-cycle), per-branch two-cycle counts on the fiber, and per-component
/// fiber genera from the same count restricted to each orbit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RamificationReport {
    pub n: u32,
    pub branch_count: usize,
    pub g_x: i64,
    /// Two-cycle count of each branch element on the full 2^n fiber.
    pub branch_two_cycles: Vec<u64>,
    pub component_sizes: Vec<u64>,
    pub component_genera: Vec<i64>,
    /// Common component genus when the fiber splits into exactly two
    /// components of equal genus.
    pub g_ctilde_component: Option<i64>,
}

pub fn ramification_and_genus(data: &MonodromyData) -> Result<RamificationReport> {
    data.validate()?;
    check_orbit_cap(data.n)?;
    let n = data.n;

    let mut strands = UnionFind::new(n as usize);
    for g in data.elements() {
        for i in 0..n {
            strands.union(i, g.perm()[i as usize]);
        }
    }
    if (0..n).filter(|&i| strands.find(i) == i).count() != 1 {
        return Err(Error::InvalidMonodromy(
            "strand action is not transitive, so the downstairs cover is disconnected".into(),
        ));
    }

    let b = data.branches.len() as i64;
    let gy = data.genus_y as i64;
    let two_gx_minus_2 = (n as i64) * (2 * gy - 2) + b;
    debug_assert!(two_gx_minus_2 % 2 == 0);
    let g_x = two_gx_minus_2 / 2 + 1;

    let size = 1u32 << n;
    let mut fiber = UnionFind::new(size as usize);
    for g in data.elements() {
        for x in 0..size {
            fiber.union(x, g.act_word(x));
        }
    }
    let mut roots = Vec::new();
    let mut sizes = std::collections::BTreeMap::new();
    for x in 0..size {
        let r = fiber.find(x);
        if r == x {
            roots.push(x);
        }
        *sizes.entry(r).or_insert(0u64) += 1;
    }

    let mut branch_two_cycles = vec![0u64; data.branches.len()];
    let mut per_orbit = vec![std::collections::BTreeMap::<u32, u64>::new(); data.branches.len()];
    for (bi, t) in data.branches.iter().enumerate() {
        for x in 0..size {
            let y = t.act_word(x);
            if y > x {
                branch_two_cycles[bi] += 1;
                let r = fiber.find(x);
                *per_orbit[bi].entry(r).or_insert(0) += 1;
            }
        }
    }

    let mut component_sizes = Vec::with_capacity(roots.len());
    let mut component_genera = Vec::with_capacity(roots.len());
    for &r in &roots {
        let orbit_size = sizes[&r] as i64;
        let ram: i64 = per_orbit
            .iter()
            .map(|m| *m.get(&r).unwrap_or(&0) as i64)
            .sum();
        let two_g_minus_2 = orbit_size * (2 * gy - 2) + ram;
        if two_g_minus_2 % 2 != 0 {
            return Err(Error::InvalidMonodromy(
                "component ramification does not balance".into(),
            ));
        }
        component_sizes.push(orbit_size as u64);
        component_genera.push(two_g_minus_2 / 2 + 1);
    }

    let g_ctilde_component = if component_genera.len() == 2 && component_genera[0] == component_genera[1]
    {
        Some(component_genera[0])
    } else {
        None
    };

    Ok(RamificationReport {
        n,
        branch_count: data.branches.len(),
        g_x,
        branch_two_cycles,
        component_sizes,
        component_genera,
        g_ctilde_component,
    })
}

fn random_group_element(n: u32, rng: &mut ChaCha8Rng) -> Result<SignedPerm> {
    let mut perm: Vec<u32> = (0..n).collect();
    for i in (1..n as usize).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }
    let mut signs = vec![0u8; n as usize];
    let mut parity = 0u8;
    for s in signs.iter_mut().take(n as usize - 1) {
        *s = rng.random_range(0..2u8);
        parity ^= *s;
    }
    signs[n as usize - 1] = parity;
    SignedPerm::new(perm, &signs)
}

fn random_reflection(n: u32, rng: &mut ChaCha8Rng) -> Result<SignedPerm> {
    let i = rng.random_range(0..n);
    let mut j = rng.random_range(0..n - 1);
    if j >= i {
        j += 1;
    }
    SignedPerm::reflection(n, i, j, rng.random_range(0..2u8) == 1)
}

/// Draws monodromy data with the given branch count over a genus-g base,
/// retrying until the strand action is transitive and the fiber splits
/// into exactly one even and one odd component. Deterministic in the seed.
pub fn random_simple_monodromy(
    n: u32,
    branch_count: u32,
    genus_y: u32,
    seed: u64,
) -> Result<MonodromyData> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "at least two strands are required".into(),
        ));
    }
    check_orbit_cap(n)?;
    if branch_count == 0 {
        return Err(Error::InvalidArgument(
            "at least two branch points are required".into(),
        ));
    }
    if branch_count % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "branch count must be even, got {branch_count}: each branch element is an odd permutation, so an odd product can never close the surface relation"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLER_ATTEMPTS {
        let handles: Vec<SignedPerm> = (0..2 * genus_y)
            .map(|_| random_group_element(n, &mut rng))
            .collect::<Result<_>>()?;
        let mut branches: Vec<SignedPerm> = (0..branch_count.saturating_sub(2))
            .map(|_| random_reflection(n, &mut rng))
            .collect::<Result<_>>()?;

        let mut acc = SignedPerm::identity(n)?;
        for pair in handles.chunks(2) {
            let (a, b) = (&pair[0], &pair[1]);
            acc = acc
                .compose(a)?
                .compose(b)?
                .compose(&a.inverse())?
                .compose(&b.inverse())?;
        }
        for t in &branches {
            acc = acc.compose(t)?;
        }
        let q = acc.inverse();

        let mut candidates = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for flipped in [false, true] {
                    let r = SignedPerm::reflection(n, i, j, flipped)?;
                    if r.compose(&q)?.is_reflection() {
                        candidates.push(r);
                    }
                }
            }
        }
        if candidates.is_empty() {
            continue;
        }
        let r = candidates[rng.random_range(0..candidates.len())].clone();
        let last = r.compose(&q)?;
        branches.push(r);
        branches.push(last);

        let data = MonodromyData {
            n,
            genus_y,
            handles,
            branches,
        };
        if data.validate().is_err() {
            continue;
        }
        let counts = component_counts(&data)?;
        if counts.orbits_on_strands == 1
            && counts.orbits_on_liftings == 2
            && counts.orbits_even == 1
            && counts.orbits_odd == 1
        {
            return Ok(data);
        }
    }
    Err(Error::NoInstanceFound(format!(
        "no transitive two-component instance for n={n}, branches={branch_count}, base genus {genus_y} after {SAMPLER_ATTEMPTS} draws"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(bits: &[u8]) -> BitVector {
        BitVector::from_bits(bits).unwrap()
    }

    #[test]
    fn constructor_validations() {
        assert!(SignedPerm::new(vec![1, 2, 0], &[1, 1, 0]).is_ok());
        assert!(SignedPerm::new(vec![1, 2, 0], &[1, 0, 0]).is_err()); // odd flips
        assert!(SignedPerm::new(vec![1, 1, 0], &[0, 0, 0]).is_err()); // not a permutation
        assert!(SignedPerm::new(vec![1, 2, 3], &[0, 0, 0]).is_err()); // image out of range
        assert!(SignedPerm::new(vec![0, 1], &[0, 0, 0]).is_err()); // sign length
    }

    #[test]
    fn act_pinned() {
        let g = SignedPerm::new(vec![1, 2, 0], &[1, 1, 0]).unwrap();
        let y = g.act(&bv(&[0, 0, 0])).unwrap();
        assert_eq!(y.to_vec(), vec![0, 1, 1]);
        let y = g.act(&bv(&[1, 0, 1])).unwrap();
        // y[1] = 1^1 = 0, y[2] = 0^1 = 1, y[0] = 1^0 = 1
        assert_eq!(y.to_vec(), vec![1, 0, 1]);
    }

    #[test]
    fn compose_matches_sequential_action() {
        let g = SignedPerm::new(vec![2, 0, 1, 3], &[1, 0, 0, 1]).unwrap();
        let h = SignedPerm::new(vec![1, 0, 3, 2], &[0, 1, 1, 0]).unwrap();
        let gh = g.compose(&h).unwrap();
        for word in 0..16u32 {
            let x = BitVector::new(4, word).unwrap();
            let via_product = gh.act(&x).unwrap();
            let sequential = g.act(&h.act(&x).unwrap()).unwrap();
            assert_eq!(via_product, sequential);
        }
    }

    #[test]
    fn inverse_cancels() {
        let g = SignedPerm::new(vec![3, 1, 4, 2, 0], &[1, 0, 1, 1, 1]).unwrap();
        assert!(g.compose(&g.inverse()).unwrap().is_identity());
        assert!(g.inverse().compose(&g).unwrap().is_identity());
    }

    #[test]
    fn reflections_are_involutions() {
        for n in [3u32, 4, 5] {
            let mut count = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    for flipped in [false, true] {
                        let r = SignedPerm::reflection(n, i, j, flipped).unwrap();
                        assert!(r.is_reflection());
                        assert!(r.compose(&r).unwrap().is_identity());
                        count += 1;
                    }
                }
            }
            assert_eq!(count, n * (n - 1));
        }
    }

    #[test]
    fn reflection_two_cycle_counts() {
        // A strand transposition moves exactly the words where the two
        // coordinates disagree (plain) or agree (flipped): half of all
        // words, giving 2^(n-2) two-cycles split evenly across parities.
        for flipped in [false, true] {
            let r = SignedPerm::reflection(4, 0, 1, flipped).unwrap();
            let mut two_cycles = 0;
            let mut even_side = 0;
            for x in 0..16u32 {
                let y = r.act_word(x);
                if y > x {
                    two_cycles += 1;
                    if x.count_ones() % 2 == 0 {
                        even_side += 1;
                    }
                }
            }
            assert_eq!(two_cycles, 4); // 2^(n-2)
            assert_eq!(even_side, 2); // 2^(n-3)
        }
    }

    #[test]
    fn weight_parity_is_preserved() {
        let g = SignedPerm::new(vec![4, 2, 0, 1, 3], &[1, 1, 1, 0, 1]).unwrap();
        for x in 0..32u32 {
            assert_eq!(x.count_ones() % 2, g.act_word(x).count_ones() % 2);
        }
    }

    #[test]
    fn validate_accepts_commuting_torus() {
        let a = SignedPerm::new(vec![1, 2, 0], &[0, 0, 0]).unwrap();
        let data = MonodromyData {
            n: 3,
            genus_y: 1,
            handles: vec![a.clone(), a.clone()],
            branches: vec![],
        };
        data.validate().unwrap();
        let counts = component_counts(&data).unwrap();
        assert_eq!(counts.orbits_on_strands, 1);
        assert_eq!(counts.orbits_even + counts.orbits_odd, counts.orbits_on_liftings);
    }

    #[test]
    fn validate_rejects_open_relation() {
        let r = SignedPerm::reflection(3, 0, 1, false).unwrap();
        let s = SignedPerm::reflection(3, 1, 2, false).unwrap();
        let data = MonodromyData {
            n: 3,
            genus_y: 0,
            handles: vec![],
            branches: vec![r, s],
        };
        assert!(matches!(data.validate(), Err(Error::InvalidMonodromy(_))));
    }

    #[test]
    fn validate_rejects_non_reflection_branch() {
        let g = SignedPerm::new(vec![1, 2, 0], &[0, 0, 0]).unwrap();
        let data = MonodromyData {
            n: 3,
            genus_y: 0,
            handles: vec![],
            branches: vec![g.clone(), g.inverse()],
        };
        assert!(matches!(data.validate(), Err(Error::InvalidMonodromy(_))));
    }

    #[test]
    fn sampler_is_deterministic() {
        let a = random_simple_monodromy(4, 8, 1, 99).unwrap();
        let b = random_simple_monodromy(4, 8, 1, 99).unwrap();
        assert_eq!(a, b);
        random_simple_monodromy(4, 8, 1, 100).unwrap().validate().unwrap();
    }

    #[test]
    fn sampler_argument_checks() {
        assert!(matches!(
            random_simple_monodromy(4, 0, 1, 0),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            random_simple_monodromy(4, 7, 1, 0),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            random_simple_monodromy(5, 2, 0, 1),
            Err(Error::NoInstanceFound(_))
        ));
    }

    #[test]
    fn sampled_instance_bookkeeping() {
        let data = random_simple_monodromy(4, 8, 1, 7).unwrap();
        data.validate().unwrap();
        let counts = component_counts(&data).unwrap();
        assert_eq!(counts.orbits_on_strands, 1);
        assert_eq!(counts.orbits_on_liftings, 2);

        let report = ramification_and_genus(&data).unwrap();
        assert_eq!(report.g_x, 5); // 2g-2 = 4*(2*1-2) + 8
        assert!(report.branch_two_cycles.iter().all(|&c| c == 4)); // 2^(n-2)
        assert_eq!(report.component_sizes, vec![8, 8]);
        // 2g-2 = 8*0 + 8 branches * 2 two-cycles each => g = 9, matching
        // 2^(n-3) ((g_x - 1) - (n-4)(g_y - 1)) + 1.
        assert_eq!(report.g_ctilde_component, Some(9));
    }

    #[test]
    fn orbit_cap_enforced() {
        let data = MonodromyData {
            n: 21,
            genus_y: 1,
            handles: vec![
                SignedPerm::identity(21).unwrap(),
                SignedPerm::identity(21).unwrap(),
            ],
            branches: vec![],
        };
        assert!(matches!(
            component_counts(&data),
            Err(Error::InvalidArgument(_))
        ));
    }
}
