#pragma once

#include <stdexcept>
#include <string>

namespace maxsurf
{

/// Base class of every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI's JSON error output.
class Error : public std::runtime_error
{
public:
    Error(std::string kind, const std::string &what)
        : std::runtime_error(what), kind_(std::move(kind))
    {
    }

    const std::string &kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define MAXSURF_DEFINE_ERROR(Name)                                              \
    class Name : public Error                                                   \
    {                                                                           \
    public:                                                                     \
        explicit Name(const std::string &what) : Error(#Name, what) {}          \
    }

// complex_core
MAXSURF_DEFINE_ERROR(DomainError);
MAXSURF_DEFINE_ERROR(PoleError);
MAXSURF_DEFINE_ERROR(PoleInDomain);
MAXSURF_DEFINE_ERROR(ToleranceError);
MAXSURF_DEFINE_ERROR(NonFiniteValue);

// lorentz
MAXSURF_DEFINE_ERROR(AmbientMismatch);
MAXSURF_DEFINE_ERROR(EquatorError);
MAXSURF_DEFINE_ERROR(OffHyperboloid);
MAXSURF_DEFINE_ERROR(NorthPole);

// weierstrass
MAXSURF_DEFINE_ERROR(CommonZeroError);
MAXSURF_DEFINE_ERROR(NotIsotropic);
MAXSURF_DEFINE_ERROR(InvalidData);

// graph_pde
MAXSURF_DEFINE_ERROR(DegenerateMask);
MAXSURF_DEFINE_ERROR(NotSpacelike);
MAXSURF_DEFINE_ERROR(CurlError);
MAXSURF_DEFINE_ERROR(NotSimplyConnected);

// verify
MAXSURF_DEFINE_ERROR(InvalidMesh);
MAXSURF_DEFINE_ERROR(DegenerateTriangle);
MAXSURF_DEFINE_ERROR(NewtonDivergence);
MAXSURF_DEFINE_ERROR(OverlapEmpty);

// cli_io
MAXSURF_DEFINE_ERROR(InputError);

#undef MAXSURF_DEFINE_ERROR

} // namespace maxsurf
