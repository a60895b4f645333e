"""
CLI 명령 모듈

모든 명령은 BaseCommand를 구현하고 COMMANDS 레지스트리에 등록됩니다.
dispatch()는 명령을 실행해 (종료 코드, 출력 문자열)을 반환하며,
도메인 예외는 이 경계에서만 잡아 종료 코드와 오류 JSON으로 변환합니다.

종료 코드: 0 성공, 1 입력/설정 오류, 2 전제 조건 위반, 3 예산/상한 소진
"""

import argparse
import json
from abc import ABC, abstractmethod
from functools import reduce
from typing import Any, Dict, List, Optional, Sequence, Tuple

from app.cli.formatters import render
from app.cli.parser import parse_family, parse_poly, parse_ring
from app.config import settings
from app.errors import ConfigError, SchinzelError, VerificationFailure, exit_code_for
from app.polys.poly import Poly, PolyRing
from app.polys.rings import ZZ, PrimeField, Ring
from app.schemas.run import SCHEMA_VERSION, CommandResult, RunConfig
from common.utils.logger import get_logger, set_level

logger = get_logger(__name__)


class ArgumentParser(argparse.ArgumentParser):
    """사용법 오류를 종료 코드 1의 ConfigError로 바꿉니다."""

    def error(self, message: str):
        raise ConfigError(f"잘못된 인자입니다: {message}")


class BaseCommand(ABC):
    """
    모든 CLI 명령이 반드시 구현해야 하는 기본 구조
    """

    name: str = ""
    help: str = ""
    default_ring: str = "Z"
    minimum: int = 2

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("polys", nargs="*", help="다항식 식 (예: \"y^2 - y + 2\")")
        parser.add_argument(
            "--ring", default=self.default_ring, help="값 환: Z, Q[u], Z[u], Fp[u]:p"
        )

    @abstractmethod
    def run(self, args: argparse.Namespace) -> CommandResult:
        """명령을 실행하고 결과 봉투를 반환합니다."""
        pass

    def exit_code(self, result: CommandResult) -> int:
        return 0

    # ---- 공통 도우미 ----

    def family(
        self, args: argparse.Namespace, bivariate: Optional[bool] = None
    ) -> Tuple[Ring, List[Poly]]:
        if len(args.polys) < self.minimum:
            raise ConfigError(
                f"{self.name}: 다항식이 {self.minimum}개 이상 필요합니다 ({len(args.polys)}개)"
            )
        Z = parse_ring(args.ring)
        return Z, parse_family(args.polys, Z, bivariate)

    def envelope(
        self,
        args: argparse.Namespace,
        ring: Optional[Ring],
        polys: Sequence[Poly],
        result: Any,
        **verification: Any,
    ) -> CommandResult:
        ascending = getattr(args, "ascending", False)
        return CommandResult(
            command=self.name,
            ring=ring.name if ring is not None else None,
            inputs=[P.ring.to_str(P, ascending) for P in polys],
            result=result,
            verification=verification,
        )


class DeltaCommand(BaseCommand):
    name = "delta"
    help = "Bézout 인증서 ΣV_i·P_i = δ"

    def run(self, args):
        from app.schinzel.delta import bezout_delta, verify_certificate

        Z, polys = self.family(args)
        cert = bezout_delta(polys)
        divides = cert.resultant is None or Z.divides(cert.delta, cert.resultant)
        return self.envelope(
            args,
            Z,
            polys,
            cert,
            identity=verify_certificate(cert, polys),
            divides_resultant=divides,
        )


class MinDeltaCommand(BaseCommand):
    name = "min-delta"
    help = "차수 제한 격자의 생성원 δ_D"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--degree-bound", type=int, help="여인수 차수 상한 D")

    def run(self, args):
        from app.schinzel.delta import compute_delta

        Z, polys = self.family(args)
        result = compute_delta(polys, args.degree_bound)
        return self.envelope(
            args, Z, polys, result, divides_bezout=result.divides_bezout
        )


class AvCheckCommand(BaseCommand):
    name = "av-check"
    help = "(AV1)/(AV2) 판정"
    minimum = 1

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--assumption", choices=["av1", "av2"], default="av2")

    def run(self, args):
        from app.schinzel.values import check_av1, check_av2, scan_prime

        Z, polys = self.family(args)
        verdict = check_av1(polys) if args.assumption == "av1" else check_av2(polys)
        rechecked = None
        if not verdict.holds and verdict.method == "residue-scan":
            family = (
                polys if args.assumption == "av2" else [reduce(Poly.__mul__, polys)]
            )
            rechecked = scan_prime(family, verdict.failing_prime).all_killed
        return self.envelope(args, Z, polys, verdict, failing_prime_rechecked=rechecked)


class Av3CheckCommand(BaseCommand):
    name = "av3-check"
    help = "P(t, y)에 대한 (AV3) 판정"
    minimum = 1

    def run(self, args):
        from app.schinzel.values import check_av3

        Z, polys = self.family(args, bivariate=True)
        verdict = check_av3(polys)
        membership = verdict.notes.get("ideal_membership", {})
        consistent = all(
            membership.get(e.prime) == e.all_killed for e in verdict.evidence
        )
        return self.envelope(
            args, Z, polys, verdict, ideal_membership_agrees=consistent
        )


class FindCoprimeCommand(BaseCommand):
    name = "find-coprime"
    help = "서로소 값 증인 m 구성"

    def run(self, args):
        from app.schinzel.values import check_values, values_at
        from app.schinzel.witness import find_coprime

        Z, polys = self.family(args)
        witness = find_coprime(polys)
        check = check_values(Z, values_at(polys, witness.m))
        return self.envelope(args, Z, polys, witness, coprime=check.coprime)


class OracleCommand(BaseCommand):
    name = "oracle"
    help = "탐색 상자 전수 탐색 (독립 오라클)"
    minimum = 1

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--lo", type=int, default=-10)
        parser.add_argument("--hi", type=int, default=10)
        parser.add_argument("--degree", type=int, default=2)
        parser.add_argument("--height", type=int, default=2)

    def run(self, args):
        from app.schinzel.witness import brute_force_coprime

        Z, polys = self.family(args)
        witness = brute_force_coprime(polys, args.lo, args.hi, args.degree, args.height)
        return self.envelope(args, Z, polys, witness, found=witness is not None)


class ProfileCommand(BaseCommand):
    name = "profile"
    help = "한 주기의 값 gcd 표"

    def run(self, args):
        from app.schinzel.profile import gcd_profile

        Z, polys = self.family(args)
        profile = gcd_profile(polys)
        divides = all(Z.divides(d, profile.delta) for d in profile.table.values())
        return self.envelope(
            args,
            Z,
            polys,
            profile,
            divides_delta=divides,
            periodicity_checks=profile.periodicity_checks,
        )


class DStarCommand(BaseCommand):
    name = "dstar"
    help = "D*와 d*"

    def run(self, args):
        from app.schinzel.profile import dstar

        Z, polys = self.family(args)
        result = dstar(polys)
        return self.envelope(
            args,
            Z,
            polys,
            result,
            gcd_stable=result.gcd_stable,
            d_star_member=result.d_star in result.divisors,
        )


class DensityCommand(BaseCommand):
    name = "density"
    help = "구간에서 좋은 m의 밀도"
    minimum = 0

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--lo", type=int, default=0)
        parser.add_argument("--hi", type=int)
        parser.add_argument("--primorial", type=int, help="φ(Π_h)/Π_h와 비교할 h")

    def run(self, args):
        from app.schinzel.profile import density_good_m, primorial_density

        result: Dict[str, Any] = {}
        polys: List[Poly] = []
        Z = None
        if args.polys:
            if args.hi is None:
                raise ConfigError("density: --hi가 필요합니다")
            Z, polys = self.family(args)
            result["density"] = density_good_m(polys, args.lo, args.hi)
        if args.primorial is not None:
            result["primorial_density"] = primorial_density(args.primorial)
        if not result:
            raise ConfigError("density: 다항식 또는 --primorial이 필요합니다")
        verification = {}
        if len(result) == 2:
            verification["matches_primorial"] = (
                result["density"] == result["primorial_density"]
            )
        return self.envelope(args, Z, polys, result, **verification)


class HilbertProgressionCommand(BaseCommand):
    name = "hilbert-progression"
    help = "원시성 등차수열 (a₀, b₀)"
    minimum = 1

    def run(self, args):
        from app.hilbert.progression import is_primitive_at, primitivity_progression

        Z, polys = self.family(args, bivariate=True)
        witness = primitivity_progression(polys)
        kept = [P for i, P in enumerate(polys) if i not in witness.dropped]
        primitive = all(is_primitive_at(P, t) for t in witness.samples for P in kept)
        return self.envelope(args, Z, polys, witness, samples_primitive=primitive)


class HilbertScanCommand(BaseCommand):
    name = "hilbert-scan"
    help = "등차수열 위 기약 특수화 스캔"
    minimum = 1

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--want", type=int, default=5)
        parser.add_argument("--cap", type=int, help="스캔 상한 (기본값: SCAN_CAP)")
        parser.add_argument(
            "--strict", action="store_true", help="적중 수가 부족하면 ScanExhausted 오류"
        )

    def run(self, args):
        from app.hilbert.progression import primitivity_progression
        from app.hilbert.specialization import irreducible_specializations

        Z, polys = self.family(args, bivariate=True)
        progression = primitivity_progression(polys)
        report = irreducible_specializations(
            polys, progression, args.want, args.cap, strict=args.strict
        )
        return self.envelope(
            args,
            Z,
            polys,
            {"progression": progression, "report": report},
            hits_rechecked=True,
        )

    def exit_code(self, result):
        return 3 if result.result["report"].exhausted else 0


class PolyringScanCommand(BaseCommand):
    name = "polyring-scan"
    help = "ℤ[u] 또는 F_p[u]에서 기약 특수화 스캔"
    default_ring = "Z[u]"
    minimum = 1

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--degree", type=int, default=1)
        parser.add_argument("--height", type=int, default=3)
        parser.add_argument("--want", type=int, default=5)
        parser.add_argument("--cap", type=int)
        parser.add_argument("--strict", action="store_true")

    def run(self, args):
        from app.hilbert.specialization import specialize_polyring_irreducible

        Z, polys = self.family(args, bivariate=True)
        report = specialize_polyring_irreducible(
            polys, args.degree, args.height, args.want, args.cap, strict=args.strict
        )
        return self.envelope(args, Z, polys, report, evidence_only=report.evidence_only)

    def exit_code(self, result):
        return 3 if result.result.exhausted else 0


class ModNCommand(BaseCommand):
    name = "mod-n"
    help = "P_i(m)이 N과 서로소인 소수와 mod N 합동인 m"
    minimum = 1

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--mod", type=int, required=True, dest="modulus")
        parser.add_argument("--want", type=int, default=1)

    def run(self, args):
        from app.hilbert.modn import mod_n_schinzel

        Z, polys = self.family(args)
        witnesses = mod_n_schinzel(polys, args.modulus, args.want)
        congruent = all(
            (e.prime - e.value) % w.modulus == 0 for w in witnesses for e in w.entries
        )
        return self.envelope(args, Z, polys, witnesses, congruent=congruent)


class GoldbachModNCommand(BaseCommand):
    name = "goldbach-mod-n"
    help = "2n ≡ p + q (mod N)"
    minimum = 0

    def add_arguments(self, parser):
        parser.add_argument("--two-n", type=int, required=True)
        parser.add_argument("--mod", type=int, required=True, dest="modulus")
        parser.add_argument("--want", type=int, default=1)

    def run(self, args):
        from app.hilbert.modn import goldbach_mod_n

        witnesses = goldbach_mod_n(args.two_n, args.modulus, args.want)
        congruent = all((w.p + w.q - w.two_n) % w.modulus == 0 for w in witnesses)
        return self.envelope(args, ZZ, [], witnesses, congruent=congruent)


class FactorCommand(BaseCommand):
    name = "factor"
    help = "한 다항식의 인수분해 (ℤ: Kronecker, F_p: Berlekamp)"
    minimum = 1

    def run(self, args):
        from app.polys.factor import factor_over_prime_field, kronecker_factor

        if len(args.polys) != 1:
            raise ConfigError("factor: 다항식을 하나만 주어야 합니다")
        K = parse_ring(args.ring)
        if K != ZZ and not isinstance(K, PrimeField):
            raise ConfigError(f"factor: Z 또는 Fp:p 환만 지원합니다 ({K.name})")
        R = PolyRing(K, "y")
        P = parse_poly(args.polys[0], R)
        F = kronecker_factor(P) if K == ZZ else factor_over_prime_field(P)
        return self.envelope(args, K, [P], F, reconstructs=F.expand(R) == P)


class SelftestCommand(BaseCommand):
    name = "selftest"
    help = "고정 예제(fixture) 전체 실행"
    minimum = 0

    def add_arguments(self, parser):
        parser.add_argument("--fixtures", help="fixture 디렉터리 (기본값: fixtures/)")
        parser.add_argument("--sample", type=int, help="무작위로 고를 fixture 수 (--seed 사용)")

    def run(self, args):
        from app.cli.selftest import run_fixtures

        report = run_fixtures(args.fixtures, args.sample, settings.SEED)
        return self.envelope(
            args, None, [], report, passed=report.passed, failed=report.failed
        )

    def exit_code(self, result):
        return 1 if result.result.failed else 0


COMMANDS: Dict[str, BaseCommand] = {
    command.name: command
    for command in (
        DeltaCommand(),
        MinDeltaCommand(),
        AvCheckCommand(),
        FindCoprimeCommand(),
        OracleCommand(),
        ProfileCommand(),
        DStarCommand(),
        DensityCommand(),
        HilbertProgressionCommand(),
        HilbertScanCommand(),
        PolyringScanCommand(),
        ModNCommand(),
        GoldbachModNCommand(),
        SelftestCommand(),
        FactorCommand(),
        Av3CheckCommand(),
    )
}


def build_parser() -> ArgumentParser:
    """명령줄 인자 파서를 만듭니다."""
    parser = ArgumentParser(prog="schinzel", description="상대 Schinzel 가설 증인 도구")
    parser.add_argument("--format", choices=["json", "table"], default="json")
    parser.add_argument("--ascending", action="store_true", help="다항식을 오름차순으로 출력")
    parser.add_argument("--budget-scale", help="모든 상한에 곱할 양의 유리수 (예: 1/2)")
    parser.add_argument("--seed", type=int, help="무작위 표본 시드")
    parser.add_argument("--log-level", help="로깅 레벨 (기본값: SCHINZEL_LOG_LEVEL)")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, command in COMMANDS.items():
        sub = subparsers.add_parser(name, help=command.help)
        command.add_arguments(sub)
    return parser


def _error_output(command: Optional[str], error: SchinzelError) -> str:
    payload = {"schema": SCHEMA_VERSION, "command": command, **error.to_dict()}
    return json.dumps(payload, ensure_ascii=False, indent=2)


def dispatch(argv: Optional[Sequence[str]] = None) -> Tuple[int, str]:
    """
    명령을 실행합니다.

    Returns:
        (종료 코드, 출력 문자열)
    """
    command_name = None
    saved = (settings.BUDGET_SCALE, settings.SEED)
    try:
        args = build_parser().parse_args(argv)
        command_name = args.command
        try:
            set_level(args.log_level or settings.LOG_LEVEL)
        except ValueError as e:
            raise ConfigError(f"잘못된 로깅 레벨입니다: {str(e)}") from e
        config = RunConfig.from_settings(budget_scale=args.budget_scale, seed=args.seed)
        config.activate()

        command = COMMANDS[args.command]
        result = command.run(args)
        result = result.model_copy(
            update={
                "budget_report": {"budget_scale": config.budget_scale, **config.caps}
            }
        )
        return command.exit_code(result), render(result, args.format, args.ascending)
    except VerificationFailure as e:
        logger.error(f"{command_name} 내부 재검증 실패: {str(e)}")
        return e.exit_code, _error_output(command_name, e)
    except SchinzelError as e:
        logger.error(f"{command_name or 'schinzel'} 실행 중 오류 발생: {str(e)}")
        return exit_code_for(e), _error_output(command_name, e)
    finally:
        settings.BUDGET_SCALE, settings.SEED = saved


def main(argv: Optional[Sequence[str]] = None) -> int:
    """콘솔 진입점"""
    code, output = dispatch(argv)
    print(output)
    return code
