pub type HomCount = num_bigint::BigUint;
