#pragma once

#include <stdexcept>
#include <string>

namespace schottky {

// Base for all domain errors. `code()` is the stable machine-readable name
// that the CLI emits in error JSON.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

#define SCHOTTKY_ERROR(Name)                                                  \
    class Name : public Error {                                              \
      public:                                                                 \
        explicit Name(const std::string& what) : Error(#Name, what) {}       \
    }

SCHOTTKY_ERROR(NotSymmetric);
SCHOTTKY_ERROR(NotPositive);
SCHOTTKY_ERROR(IllConditioned);
SCHOTTKY_ERROR(RadiusCapExceeded);
SCHOTTKY_ERROR(DegenerateSample);
SCHOTTKY_ERROR(EvenCharacteristic);
SCHOTTKY_ERROR(SingularOddTheta);
SCHOTTKY_ERROR(SingularBasis);
SCHOTTKY_ERROR(WrongArity);
SCHOTTKY_ERROR(SingularCubic);
SCHOTTKY_ERROR(SingularMatrix);
SCHOTTKY_ERROR(QuadratureDivergence);
SCHOTTKY_ERROR(NearDegenerateGaps);
SCHOTTKY_ERROR(SymplecticBasisNotFound);
SCHOTTKY_ERROR(CharacteristicMoved);
SCHOTTKY_ERROR(GenusUnsupported);
SCHOTTKY_ERROR(NotSymplectic);
SCHOTTKY_ERROR(BadInput);

#undef SCHOTTKY_ERROR

}  // namespace schottky
