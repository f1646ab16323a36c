use std::sync::Arc;

use crate::algebra::QuotientAlgebra;

pub(crate) fn r1() -> Arc<QuotientAlgebra> {
    Arc::new(QuotientAlgebra::build(101, &["x"], &["x^2"]).unwrap())
}

pub(crate) fn r2() -> Arc<QuotientAlgebra> {
    Arc::new(QuotientAlgebra::build(101, &["x", "y"], &["x^2", "x*y", "y^2"]).unwrap())
}

pub(crate) fn r3() -> Arc<QuotientAlgebra> {
    Arc::new(
        QuotientAlgebra::build(101, &["a", "b", "c"], &["a^2", "b*c", "c^2", "b^2 - a*c"]).unwrap(),
    )
}
