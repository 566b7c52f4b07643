from pydantic.env_settings import BaseSettings
from pydantic.fields import Field


class TestSettings(BaseSettings):
    order: int = Field(4, env='TEST_ORDER')
    jet_order: int = Field(4, env='TEST_JET_ORDER')
    certify_order: int = Field(12, env='TEST_CERTIFY_ORDER')
    margin: int = Field(10, env='TEST_MARGIN')


test_settings = TestSettings()
