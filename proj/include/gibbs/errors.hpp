#ifndef GIBBS_ERRORS_HPP
#define GIBBS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gibbs {

/// Parameter outside the admissible open set of the model.
class AdmissibilityError : public std::domain_error {
public:
    explicit AdmissibilityError(const std::string& reason) : std::domain_error(reason) {}
};

/// A Monte-Carlo estimate did not reach the requested precision.
class EstimationError : public std::runtime_error {
public:
    EstimationError(const std::string& what, double achieved_std_error)
        : std::runtime_error(what), achieved_std_error(achieved_std_error) {}
    double achieved_std_error;
};

/// Operation requires structure (cocycle, bracket, sampler) the model lacks.
class UnsupportedModelError : public std::logic_error {
public:
    explicit UnsupportedModelError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gibbs

#endif
