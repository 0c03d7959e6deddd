//! Plain-text drawings.

use zeta_core::{area_vector, DyckPath, PlaneTree, Step, ROOT};

/// The path on the `n x n` grid, origin bottom left. Lattice points are `+`
/// on the path and `.` elsewhere on or above the diagonal, the diagonal
/// squares carry `/`, and the full squares between path and diagonal are
/// filled with `#`.
pub fn dyck(path: &DyckPath) -> String {
    let n = path.size();
    let (width, height) = (2 * n + 1, 2 * n + 1);
    let mut canvas = vec![vec![' '; width]; height];
    // Lattice point (x, y) sits at column 2x, row 2(n - y).
    let row = |y: usize| 2 * (n - y);
    for y in 0..=n {
        for x in 0..=y {
            canvas[row(y)][2 * x] = '.';
        }
        if y < n {
            canvas[row(y) - 1][2 * y + 1] = '/';
        }
    }
    for (y, &a) in area_vector(path).entries().iter().enumerate() {
        for x in y - a..y {
            canvas[row(y) - 1][2 * x + 1] = '#';
        }
    }
    let (mut x, mut y) = (0, 0);
    canvas[row(0)][0] = '+';
    for step in path.steps() {
        match step {
            Step::North => {
                canvas[row(y) - 1][2 * x] = '|';
                y += 1;
            }
            Step::East => {
                canvas[row(y)][2 * x + 1] = '-';
                x += 1;
            }
        }
        canvas[row(y)][2 * x] = '+';
    }
    let mut text = String::new();
    for line in canvas {
        let line: String = line.into_iter().collect();
        text.push_str(line.trim_end());
        text.push('\n');
    }
    text
}

/// One node per line, indented two spaces per level, children left to right.
/// The root is `*`, other nodes `o`.
pub fn tree(tree: &PlaneTree) -> String {
    let mut text = String::new();
    let mut stack = vec![ROOT];
    while let Some(u) = stack.pop() {
        let indent = "  ".repeat(tree.depth(u));
        let mark = if u == ROOT { '*' } else { 'o' };
        text.push_str(&format!("{indent}{mark}\n"));
        stack.extend(tree.children(u).iter().rev());
    }
    text
}
