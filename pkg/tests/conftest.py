import pytest

from kopos.core import parse_tag_class_map
from kopos.corpus_io import read_lexicon

DESK_LEXICON = """\
# word\tpos\ttranslations
精密\ta\t세밀하다
的\tu\t
观察\tn\t관찰
观察\tv\t관찰하다
是\tv\t이다
科学\tn\t과학
研究\tn\t연구
研究\tv\t연구하다
基础\tn\t기초
我\tr\t나
朋友\tn\t동무
学习\tn\t학습
学习\tv\t배우다
中国语\tn\t중국어
中国\tn\t중국
了\tu\t
所\tn\t소
所\tu\t
、\tw\t
控制\tn\t조종
控制\tv\t조종하다
技术\tn\t기술
国防\tn\t국방
建设\tn\t건설
建设\tv\t건설하다
交换\tn\t교환
交换\tv\t교환하다
有限\ta\t유한하다
有限\tn\t유한
概率\tn\t확률
热\tn\t열
热\ta\t뜨겁다
传导\tn\t전도
传导\tv\t전도하다
工作\tn\t일
工作\tv\t일하다
他们\tr\t그들
他\tr\t그
我们\tr\t우리
学生\tn\t학생
老师\tn\t선생
已经\td\t이미
都\td\t모두
问题\tn\t문제
过\tu\t
汉语\tn\t한어
很\td\t매우
重要\ta\t중요하다
"""

# coarse tags as in the word-by-word example, fine tags as in the corpus listing
TAG_MAP = """\
NN\tnoun
PV\tverb
N\tnoun
V\tverb
"""

# the Korean corpus listing, copied character for character
ECONOMY_KOREAN = (
    "상품/NNGC++의/TCP 가치/NNGC++는/TA 상품/NNGC++생산/NNGV++과/TCJ 교환/NNG++의/TCP "
    "존재/NNGC++와/TCJ 관련되/PVG++ㄴ /TDP 경제/NNGC++범주/NNG++이/TEP++다/TFK "
    "./NNGC++상품/NNGC++생산/NNGV++과/TCJ 교환/NNG++을/TCO 떠나/PVG++아/TJA++서/TJ++는/TA "
    "가치/NNGC++문제/NNGC++에/TCO 대하/PVG++여/TJA 론하/PVG++ㄴ/TDF++수/NNDIP 없/PAS++다/TFK "
    "./NNGC++"
)

# the Korean side of the worked example, tagged in the fine style
SCIENCE_KOREAN = ("세밀하/PAG++ㄴ/TDP 관찰/NNG++은/TA 과학/NNG++연구/NNG++의/TCP "
                  "기초/NNG++이/TEP++다/TFK")

FRIEND_PAIR = "我 的 朋友 学习 中国语\n나/N 의/T 동무/N 는/T 중국어/N 를/T 배우다/V ㄴ다/T\n"


@pytest.fixture(scope="session")
def lex():
    return read_lexicon(DESK_LEXICON)


@pytest.fixture(scope="session")
def tag_map():
    return parse_tag_class_map(TAG_MAP)


# -- acceptance reporting ----------------------------------------------------

_criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _criteria.append((marker.args[0], marker.args[1], rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, outcome in sorted(_criteria):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {number}. {text}")
