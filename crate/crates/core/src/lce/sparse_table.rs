/// Range-minimum table over `u32` values with O(1) queries.
#[derive(Debug, Clone)]
pub struct SparseTable {
    // levels[k][x] = min(values[x .. x + 2^k])
    levels: Vec<Vec<u32>>,
}

impl SparseTable {
    pub fn new(values: Vec<u32>) -> Self {
        let n = values.len();
        let mut levels = vec![values];
        let mut width = 1;
        while 2 * width <= n {
            let prev = levels.last().unwrap();
            let next: Vec<u32> = (0..=n - 2 * width)
                .map(|x| prev[x].min(prev[x + width]))
                .collect();
            levels.push(next);
            width *= 2;
        }
        SparseTable { levels }
    }

    /// Minimum over `lo..=hi`. Requires `lo <= hi < len`.
    #[inline]
    pub fn min(&self, lo: usize, hi: usize) -> u32 {
        debug_assert!(lo <= hi);
        let k = (hi - lo + 1).ilog2() as usize;
        let level = &self.levels[k];
        level[lo].min(level[hi + 1 - (1 << k)])
    }
}
