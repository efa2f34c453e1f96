//! A fixed-length bitset used for incidence adjacency rows and candidate
//! sets during flag enumeration.

#[derive(Clone, PartialEq, Eq)]
pub struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn new(len: usize) -> Bits {
        Bits {
            len,
            words: vec![0; (len + 63) / 64],
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and_assign(&mut self, other: &Bits) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn or_assign(&mut self, other: &Bits) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn and(&self, other: &Bits) -> Bits {
        let mut out = self.clone();
        out.and_assign(other);
        out
    }

    /// True if `self & other` is nonempty within [lo, hi).
    pub fn intersects_range(&self, other: &Bits, lo: usize, hi: usize) -> bool {
        if lo >= hi {
            return false;
        }
        let wl = lo / 64;
        let wh = (hi - 1) / 64;
        for w in wl..=wh {
            let mut x = self.words[w] & other.words[w];
            if w == wl {
                x &= !0u64 << (lo % 64);
            }
            if w == wh {
                let top = (hi - 1) % 64;
                if top < 63 {
                    x &= (1u64 << (top + 1)) - 1;
                }
            }
            if x != 0 {
                return true;
            }
        }
        false
    }

    pub fn iter_ones(&self) -> BitsIter<'_> {
        BitsIter {
            bits: self,
            word_idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Ones restricted to [lo, hi).
    pub fn iter_ones_range(&self, lo: usize, hi: usize) -> impl Iterator<Item = usize> + '_ {
        self.iter_ones().skip_while(move |&i| i < lo).take_while(move |&i| i < hi)
    }
}

pub struct BitsIter<'a> {
    bits: &'a Bits,
    word_idx: usize,
    cur: u64,
}

impl<'a> Iterator for BitsIter<'a> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                let idx = self.word_idx * 64 + tz;
                return if idx < self.bits.len { Some(idx) } else { None };
            }
            self.word_idx += 1;
            if self.word_idx >= self.bits.words.len() {
                return None;
            }
            self.cur = self.bits.words[self.word_idx];
        }
    }
}
