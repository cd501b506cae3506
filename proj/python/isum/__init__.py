from ._isum import (
    ConstantEstimate,
    DomainError,
    Function,
    QuadratureResult,
    RefusedError,
    SigmaResult,
    bernoulli_number,
    callable_function,
    catalog_function,
    catalog_names,
    euler_constant,
    expression_function,
    gregory_coeff,
    gregory_sum,
    gregory_tail,
    oracle,
    sigma,
    sigma_constant,
    sigma_derivative,
)

__all__ = [name for name in dir() if not name.startswith("_")]
