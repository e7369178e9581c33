from .blaschkeProduct import BlaschkeProduct, evaluate, multiply, divide, gcd, lcm, divides, same_zeros, random_blaschke
