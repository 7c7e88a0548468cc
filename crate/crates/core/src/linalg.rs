//! Minimal fixed-size vector/matrix helpers. Everything in this crate is 3×3
//! real arithmetic, so plain arrays beat pulling in a linear-algebra crate.

pub type Vec3 = [f64; 3];
pub type Mat3 = [[f64; 3]; 3];

pub const ZERO_VEC: Vec3 = [0.0; 3];
pub const ZERO_MAT: Mat3 = [[0.0; 3]; 3];

pub const IDENTITY: Mat3 = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];

pub fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn norm(a: Vec3) -> f64 {
    dot(a, a).sqrt()
}

pub fn add(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn scale(a: Vec3, s: f64) -> Vec3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

pub fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Outer product a bᵀ.
pub fn outer(a: Vec3, b: Vec3) -> Mat3 {
    let mut m = ZERO_MAT;
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = a[i] * b[j];
        }
    }
    m
}

pub fn mat_vec(m: &Mat3, v: Vec3) -> Vec3 {
    [
        dot(m[0], v),
        dot(m[1], v),
        dot(m[2], v),
    ]
}

pub fn mat_add(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut m = ZERO_MAT;
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = a[i][j] + b[i][j];
        }
    }
    m
}

pub fn mat_sub(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut m = ZERO_MAT;
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = a[i][j] - b[i][j];
        }
    }
    m
}

pub fn mat_scale(a: &Mat3, s: f64) -> Mat3 {
    let mut m = ZERO_MAT;
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = a[i][j] * s;
        }
    }
    m
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut m = ZERO_MAT;
    for i in 0..3 {
        for j in 0..3 {
            for l in 0..3 {
                m[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    m
}

/// Frobenius-style full contraction Σᵢⱼ aᵢⱼ bᵢⱼ.
pub fn mat_contract(a: &Mat3, b: &Mat3) -> f64 {
    let mut s = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            s += a[i][j] * b[i][j];
        }
    }
    s
}

pub fn mat_max_abs(a: &Mat3) -> f64 {
    let mut m: f64 = 0.0;
    for row in a {
        for &x in row {
            m = m.max(x.abs());
        }
    }
    m
}

pub fn trace(a: &Mat3) -> f64 {
    a[0][0] + a[1][1] + a[2][2]
}
