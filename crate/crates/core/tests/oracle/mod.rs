//! Brute-force ring search that shares nothing with the structure-constant
//! enumerator: it fills a whole multiplication table cell by cell over a
//! fixed addition table and abandons a branch only when some fully filled
//! instance of distributivity or associativity already fails, so every
//! table it skips is invalid. Isomorphism is decided by trying every
//! permutation of the elements.

#![allow(dead_code)]

pub type Table = Vec<Vec<usize>>;

const UNSET: usize = usize::MAX;

fn partial_ok(add: &Table, mul: &Table) -> bool {
    let n = add.len();
    let get = |a: usize, b: usize| mul[a][b];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                // x(y+z) = xy + xz
                let (l, a, b) = (get(x, add[y][z]), get(x, y), get(x, z));
                if l != UNSET && a != UNSET && b != UNSET && l != add[a][b] {
                    return false;
                }
                // (x+y)z = xz + yz
                let (l, a, b) = (get(add[x][y], z), get(x, z), get(y, z));
                if l != UNSET && a != UNSET && b != UNSET && l != add[a][b] {
                    return false;
                }
                // (xy)z = x(yz)
                let (p, q) = (get(x, y), get(y, z));
                if p != UNSET && q != UNSET {
                    let (l, r) = (get(p, z), get(x, q));
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn fill(add: &Table, mul: &mut Table, cell: usize, out: &mut Vec<Table>, nodes: &mut u64) {
    let n = add.len();
    *nodes += 1;
    if cell == n * n {
        out.push(mul.clone());
        return;
    }
    let (i, j) = (cell / n, cell % n);
    for v in 0..n {
        mul[i][j] = v;
        if partial_ok(add, mul) {
            fill(add, mul, cell + 1, out, nodes);
        }
    }
    mul[i][j] = UNSET;
}

/// Every multiplication table making `add` a ring, with the number of
/// search nodes visited.
pub fn all_mul_tables(add: &Table) -> (Vec<Table>, u64) {
    let n = add.len();
    let mut mul = vec![vec![UNSET; n]; n];
    let mut out = Vec::new();
    let mut nodes = 0;
    fill(add, &mut mul, 0, &mut out, &mut nodes);
    (out, nodes)
}

/// Full check of the ring axioms for a complete table.
pub fn is_ring(add: &Table, mul: &Table) -> bool {
    partial_ok(add, mul)
}

pub fn cyclic_add(n: usize) -> Table {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// Addition of `Z/2 x Z/2` on `0..4` as bitwise xor.
pub fn klein_add() -> Table {
    (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Rings `(add1, mul1)` and `(add2, mul2)` are isomorphic, by trying every
/// bijection of the underlying sets (small orders only).
pub fn brute_isomorphic(add1: &Table, mul1: &Table, add2: &Table, mul2: &Table) -> bool {
    let n = add1.len();
    if add2.len() != n {
        return false;
    }
    permutations(n).into_iter().any(|p| {
        (0..n).all(|a| {
            (0..n).all(|b| p[add1[a][b]] == add2[p[a]][p[b]] && p[mul1[a][b]] == mul2[p[a]][p[b]])
        })
    })
}

/// Splits `(add, mul)` pairs into isomorphism classes; returns one
/// representative index per class.
pub fn brute_classes(rings: &[(Table, Table)]) -> Vec<usize> {
    let mut reps: Vec<usize> = Vec::new();
    for (i, (a, m)) in rings.iter().enumerate() {
        if !reps.iter().any(|&r| brute_isomorphic(&rings[r].0, &rings[r].1, a, m)) {
            reps.push(i);
        }
    }
    reps
}
