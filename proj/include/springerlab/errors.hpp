#pragma once

#include <stdexcept>
#include <string>

namespace springerlab {

// Base class for all domain-rule violations. The CLI maps these to exit
// code 1; malformed input text maps to parse_error (exit code 2).
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class size_mismatch : public domain_error {
public:
    using domain_error::domain_error;
};

class rank_too_large : public domain_error {
public:
    using domain_error::domain_error;
};

class malformed_recipe : public domain_error {
public:
    using domain_error::domain_error;
};

class no_ordinary_representative : public domain_error {
public:
    using domain_error::domain_error;
};

class shape_mismatch : public domain_error {
public:
    using domain_error::domain_error;
};

class pad_too_small : public domain_error {
public:
    using domain_error::domain_error;
};

class group_mismatch : public domain_error {
public:
    using domain_error::domain_error;
};

class non_unique_minimum : public domain_error {
public:
    using domain_error::domain_error;
};

class degenerate_d_type : public domain_error {
public:
    using domain_error::domain_error;
};

class spec_mismatch : public domain_error {
public:
    using domain_error::domain_error;
};

class unsupported_j_induction : public domain_error {
public:
    using domain_error::domain_error;
};

class invalid_marking : public domain_error {
public:
    using domain_error::domain_error;
};

class no_maximum : public domain_error {
public:
    using domain_error::domain_error;
};

class too_large : public domain_error {
public:
    using domain_error::domain_error;
};

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace springerlab
